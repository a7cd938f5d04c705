void nothing(void) {
    ;
}
