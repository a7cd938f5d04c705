/* A counter incremented by a constant stays bounded. */
int count(int i, int n) {
    while (i < n) {
        i = i + 1;
    }
    return i;
}
