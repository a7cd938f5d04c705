int rotate(int x, int y, int z) {
    int t;
    while (x > 0) {
        t = x;
        x = y;
        y = z;
        z = t;
    }
    return x;
}
