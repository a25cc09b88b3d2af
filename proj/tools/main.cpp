#include <cstdio>

int main() {
  std::puts("gnocchi cli: subcommands not wired up yet");
  return 1;
}
