int sum(int a[10], int n) {
    return n;
}
