int deref(int *x) {
    int y;
    y = 1;
    return y;
}
