#include <cstdio>

int main() {
  std::fputs("atlas: command-line surface not wired up yet\n", stderr);
  return 3;
}
