#include "golden.hpp"

#include "mtp/errors.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace mtp::cli {

namespace {

struct Block {
    std::string name;
    std::size_t shift = 0;
    Rational scale{1};
    std::optional<std::vector<Rational>> coeffs;
};

Poly finish(const Block& b, const std::string& path) {
    if (!b.coeffs) throw DomainError(path + ": poly '" + b.name + "' has no coeffs line");
    return (Poly(*b.coeffs) * b.scale).multiply_by_x_power(b.shift);
}

}  // namespace

GoldenSet read_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open golden file " + path);
    GoldenSet out;
    std::optional<Block> block;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string key;
        if (!(words >> key)) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        if (key == "poly") {
            if (block) out.emplace_back(block->name, finish(*block, path));
            block = Block{};
            if (!(words >> block->name)) throw DomainError(where + ": poly needs a name");
            continue;
        }
        if (!block) throw DomainError(where + ": '" + key + "' outside a poly block");
        if (key == "shift") {
            if (!(words >> block->shift)) throw DomainError(where + ": bad shift");
        } else if (key == "scale") {
            std::string s;
            if (!(words >> s)) throw DomainError(where + ": bad scale");
            block->scale = Rational::parse(s);
        } else if (key == "coeffs") {
            block->coeffs.emplace();
            for (std::string c; words >> c;) block->coeffs->push_back(Rational::parse(c));
        } else {
            throw DomainError(where + ": unknown key '" + key + "'");
        }
    }
    if (block) out.emplace_back(block->name, finish(*block, path));
    return out;
}

const Poly& golden_poly(const GoldenSet& set, const std::string& name) {
    for (const auto& [n, p] : set)
        if (n == name) return p;
    throw DomainError("golden polynomial '" + name + "' not found");
}

}  // namespace mtp::cli
