int add(int x, int y, int z) {
    x = y + z;
    return x;
}
