/* Every variable ends up flowing into every other one. */
int dense(int x, int y, int z, int t) {
    x = x + y;
    y = y + z;
    z = z + t;
    t = t + x;
    x = x + t;
    y = y + x;
    z = z + y;
    t = t + z;
    x = x + z;
    return t;
}
