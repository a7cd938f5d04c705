/* 2 to the power n by repeated doubling. */
int doubling(int n) {
    int r = 1;
    while (n > 0) {
        r = r + r;
        n = n - 1;
    }
    return r;
}
