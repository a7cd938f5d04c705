int good(int x, int y) {
    x = x + y;
    return x;
}

int bad(int n) {
    int r = 1;
    while (n > 0) {
        r = r + r;
    }
    return r;
}
