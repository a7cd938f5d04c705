int loop_then_sum(int i, int n, int x, int y) {
    x = y + n;
    while (i < n) {
        i = i + 1;
    }
    y = x * i;
    return y;
}
