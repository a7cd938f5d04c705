#include <stdio.h>

int first(int a, int b) {
    a = a + b;
    return a;
}

int second(int c) {
    int d = 0;
    if (c) {
        d = c;
    }
    return d;
}
