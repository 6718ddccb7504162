#ifndef MRM_CLI_HPP
#define MRM_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace mrm::cli {

// Code parameters as they appear on the command line.
struct CodeSpec {
    std::uint32_t p = 0;  // prime characteristic
    std::uint32_t t = 1;  // extension degree
    std::uint32_t m = 1;  // number of variables
    std::uint32_t s = 1;  // derivative order
    std::int64_t d = 0;   // degree bound
};

enum class EncodeMode { Systematic, Fast, Monomial };

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadParams = 2;
inline constexpr int kExitBadData = 3;

// Each command returns its process exit code and reports problems on err.
// Output paths: empty string means stdout.

int run_params(const CodeSpec& spec, std::ostream& out, std::ostream& err);
int run_encode(const CodeSpec& spec, const std::string& in_path, const std::string& out_path,
               EncodeMode mode, std::ostream& err);
int run_extract(const CodeSpec& spec, const std::string& in_path, const std::string& out_path,
                std::ostream& err);
int run_decompose(const CodeSpec& spec, const std::string& in_path, const std::string& out_path,
                  std::ostream& err);

}  // namespace mrm::cli

#endif
