#include <cstdio>
int main() { std::puts("twforge (under construction)"); return 0; }
