#include <iostream>

int main() {
    std::cout << "atam workbench\n";
    return 0;
}
