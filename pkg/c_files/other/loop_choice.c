/* The loop body's diagonal reaches p at one derivation point only. */
int loop_choice(int i, int n) {
    while (i < n) {
        i = i + 1;
    }
    return i;
}
