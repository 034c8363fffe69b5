/**
 * Chain files (JSON), grid-function files and line-oriented reports.
 *
 * Chain file:
 *   { "ambient_dim": 2, "dim": 1, "group": "circle",
 *     "complex": { "type": "kuhn", "n": 2 },            (optional)
 *     "simplices": [ { "vertices": [["0","0"], ["1/2","0"]], "coeff": "1/2" } ] }
 *
 * Grid-function file: "d n" followed by n^d rationals, whitespace separated,
 * row-major with the first coordinate most significant.
 */
#ifndef FLATCHAIN_IO_HPP
#define FLATCHAIN_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "flatchain/chains.hpp"
#include "flatchain/coarea.hpp"

namespace flatchain {

PolyChain parse_chain(const std::string& text);
std::string emit_chain(const PolyChain& c);

PolyChain read_chain_file(const std::string& path);
void write_chain_file(const std::string& path, const PolyChain& c);

GridFunction parse_grid_function(const std::string& text);
std::string emit_grid_function(const GridFunction& u);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// "key = value" lines closed by "VERDICT = PASS|FAIL".
class Report
{
  public:
    void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
    void add(const std::string& key, const Rational& value) { add(key, to_string(value)); }
    void add(const std::string& key, const SurdSum& value);
    void add(const std::string& key, double value);
    void add(const std::string& key, long value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }

    void require(bool ok) { verdict_ = verdict_ && ok; }
    bool verdict() const { return verdict_; }

    std::string str() const;

  private:
    std::vector<std::pair<std::string, std::string>> lines_;
    bool verdict_ = true;
};

/// Shortest round-trip decimal rendering.
std::string decimal(double v);

}   // namespace flatchain

#endif
