int constant(int x) {
    x = 3;
    return x;
}
