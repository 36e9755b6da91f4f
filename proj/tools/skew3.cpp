#include <iostream>

#include "skew3/app.hpp"

int main(int argc, char** argv) { return skew3::run(argc, argv, std::cout, std::cerr); }
