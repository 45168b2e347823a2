#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace thompson::cli {

enum class OutputFormat { Text, JsonLines, Dot };

struct Caps {
    int max_radius = 14;
    std::size_t max_vertices = 1000000;
    std::size_t memory_mb = 0;  // 0: THOMPSON_MEMORY_MB or its default
};

struct Context {
    OutputFormat format = OutputFormat::Text;
    Caps caps;
    std::uint64_t seed = 1;
    std::ostream* out = nullptr;
};

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 2;
inline constexpr int kDomainError = 3;
inline constexpr int kResourceError = 4;
inline constexpr int kVerificationFailure = 5;
inline constexpr int kNumericError = 6;

// "-" reads stdin, "@path" reads a file, anything else is the text itself.
std::string read_input(const std::string& arg);

int cmd_normalize(const Context& c, const std::string& x);
int cmd_antinormal(const Context& c, const std::string& x);
int cmd_length(const Context& c, const std::string& x);
int cmd_geodesic(const Context& c, const std::string& x);
int cmd_label(const Context& c, const std::string& x);
int cmd_multiply(const Context& c, const std::vector<std::string>& xs, const std::string& as);
int cmd_invert(const Context& c, const std::string& x, const std::string& as);
int cmd_abelianize(const Context& c, const std::string& x);
int cmd_eval(const Context& c, const std::string& x, const std::string& as);
int cmd_convert(const Context& c, const std::string& x, const std::string& from, const std::string& to);
int cmd_ball(const Context& c, int radius, bool stats);
int cmd_deadends(const Context& c, int radius);
int cmd_pockets(const Context& c, int radius, int k);
int cmd_mac(const Context& c, int radius, std::size_t max_candidates);
int cmd_freecheck(const Context& c, int max_len);
int cmd_growth(const Context& c, int max_n, bool brute);
int cmd_iso(const Context& c, int k, double tol);
int cmd_folner(const Context& c, std::size_t n, int k, std::size_t direct_budget);
int cmd_subtree_bound(const Context& c, const std::string& file);
int cmd_wordgraph(const Context& c, const std::string& x);
int cmd_strand_canon(const Context& c, const std::string& w);
int cmd_strand_compose(const Context& c, const std::string& a, const std::string& b);
int cmd_strand_render(const Context& c, const std::string& w);
int cmd_verify(const Context& c, const std::string& suite, int radius, std::size_t samples);

}  // namespace thompson::cli
