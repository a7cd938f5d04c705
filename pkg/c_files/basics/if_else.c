int branch(int x, int y, int z) {
    if (x > y) {
        z = x + y;
    } else {
        z = x;
        y = 0;
    }
    return z;
}
