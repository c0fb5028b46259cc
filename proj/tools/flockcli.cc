#include <flocks/cli.hh>

#include <iostream>

int main(int argc, char * argv[])
{
    return flocks::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
