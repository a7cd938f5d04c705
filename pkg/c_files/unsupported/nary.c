int f(int x, int y, int z, int w) {
    x = y + z + w;
    return x;
}
