int f(int x) {
    x = g(x);
    return x;
}
