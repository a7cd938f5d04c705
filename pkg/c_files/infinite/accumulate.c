int accumulate(int x, int y, int n) {
    while (n > 0) {
        x = x + y;
    }
    return x;
}
