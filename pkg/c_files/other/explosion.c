/* 20 derivation points, 3^20 derivations. */
int explosion(int x, int y, int z) {
    x = y + z;
    y = x + z;
    z = x + y;
    x = y + z;
    y = x + z;
    z = x + y;
    x = y + z;
    y = x + z;
    z = x + y;
    x = y + z;
    y = x + z;
    z = x + y;
    x = y + z;
    y = x + z;
    z = x + y;
    x = y + z;
    y = x + z;
    z = x + y;
    x = y + z;
    y = x + z;
    return z;
}
