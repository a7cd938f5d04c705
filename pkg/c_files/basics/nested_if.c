int nested(int x, int y) {
    int r = 0;
    if (x > 0) {
        if (y > 0) {
            r = x * y;
        } else {
            r = x - y;
        }
    }
    return r;
}
