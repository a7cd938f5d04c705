int f(int x) {
    x = y + 1;
    return x;
}
