#ifndef CRBC_CHANNEL_IO_HPP
#define CRBC_CHANNEL_IO_HPP

/// Text formats for channels and factored distributions.
///
/// Channel file:
///     dmc <|X|> <|X1|> <|Y1|> <|Y2|>
///     x x1 y1 y2 p
///     ...
/// or, with a second helper input,
///     dmc2 <|X|> <|X1|> <|X2|> <|Y1|> <|Y2|>
///     x x1 x2 y1 y2 p
/// Indices are 0-based, unspecified cells are 0, blank lines and lines
/// starting with '#' are ignored. Each conditional slice must sum to 1
/// within 1e-9.
///
/// Factored-distribution file: one block per factor,
///     factor <name> <d1> [<d2> ...]
///     i1 [i2 ...] value
/// Factor names are fixed per evaluator:
///   achievable, one-sided:      pv1v2, px_given_v, px1, pyhat
///   achievable, jam+relay:      pv1v2, px_given_v, pu, px1_given_u, pyhat
///   achievable, two-sided:      pv1v2, px_given_v, pu1x1, pyhat1,
///                               pu2x2, pyhat2
///   outer bound (auxiliary):    pv1v2, pu_given_v, pxx1_given_v
///   outer bound (input only):   pxx1
/// Auxiliary alphabet sizes are inferred from the declared shapes.

#include <iosfwd>
#include <map>
#include <string>

#include "crbc/dmc.hpp"

namespace crbc::io {

/// Parse failure; the message carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

dmc::DmcSpec load_channel(std::istream& is);
dmc::DmcSpec load_channel_file(const std::string& path);

/// A parsed factored-distribution file: factor name -> (shape, values).
struct FactorFile {
  struct Factor {
    std::vector<std::size_t> shape;
    std::vector<double> values;  // dense, row-major, zero-filled
  };
  std::map<std::string, Factor> factors;

  const Factor& require(const std::string& name) const;
};

FactorFile load_factors(std::istream& is);
FactorFile load_factors_file(const std::string& path);

/// Assemble evaluator inputs from a parsed factor file, checking shapes
/// against the channel alphabets. Throws ParseError (line 0) on missing
/// factors or shape mismatches.
dmc::Theorem1Input make_theorem1_input(const FactorFile& f,
                                       const dmc::DmcSpec& ch);
dmc::Theorem4Input make_theorem4_input(const FactorFile& f,
                                       const dmc::DmcSpec& ch);
dmc::Theorem5Input make_theorem5_input(const FactorFile& f,
                                       const dmc::DmcSpec& ch);
dmc::Theorem2Input make_theorem2_input(const FactorFile& f,
                                       const dmc::DmcSpec& ch);
std::vector<double> make_input_dist(const FactorFile& f,
                                    const dmc::DmcSpec& ch);

}  // namespace crbc::io

#endif  // CRBC_CHANNEL_IO_HPP
