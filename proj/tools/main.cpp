#include <iostream>
#include <string>
#include <vector>

#include <fermat/fermat.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const fermat::CliRequest req = fermat::parse_args(args);
        return fermat::run(req, std::cout, std::cerr);
    } catch (const fermat::HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const fermat::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        std::cerr << "usage: fermat X1 Y1 X2 Y2 X3 Y3 [--method analytic|weiszfeld|grid]\n"
                     "              [--json] [--svg PATH] [--residual-tol T] [--class-tol T]\n"
                     "              [--no-oracle-check]\n"
                     "       fermat --input FILE [options]\n";
        return 2;
    } catch (const fermat::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
