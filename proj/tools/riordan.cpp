// riordan [--order N] [--field rat|mod:p] [--json] [COMMAND ARGS...]
// Without a command, commands are read from stdin, one per line.

#include <riordan.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"Weighted Riordan arrays, Sheffer sequences and umbral calculus over exact fields"};
    std::size_t order = 16;
    std::string field = "rat";
    bool json_output = false;
    std::vector<std::string> command;
    app.add_option("--order", order, "truncation order N (2..64)");
    app.add_option("--field", field, "rat or mod:p");
    app.add_flag("--json", json_output, "print JSON instead of aligned text");
    app.add_option("command", command, "command and its arguments")->expected(0, -1);
    app.prefix_command(false);
    app.positionals_at_end(true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        riordan::Session session(order, riordan::parse_field(field), json_output);
        riordan::Outcome r = command.empty() ? session.run_script(std::cin) : session.run(command);
        std::cout << r.out;
        std::cerr << r.err;
        return r.code;
    } catch (const riordan::UsageError& e) {
        std::cerr << "UsageError: " << e.what() << "\n";
        return 2;
    }
}
