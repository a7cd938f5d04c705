/* b to the power n by repeated multiplication. */
int power(int b, int n) {
    int r = 1;
    while (n > 0) {
        r = r * b;
        n = n - 1;
    }
    return r;
}
