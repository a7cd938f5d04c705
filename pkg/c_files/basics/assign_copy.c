int copy(int x, int y) {
    x = y;
    return x;
}
