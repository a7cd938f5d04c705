int f(int x) {
    x = ;
}
