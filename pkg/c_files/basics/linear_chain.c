int chain(int x, int y, int z) {
    int t;
    t = x + y;
    z = t - x;
    x = y * 2;
    return z;
}
