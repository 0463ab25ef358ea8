#ifndef WEYLGPD_IO_HPP
#define WEYLGPD_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "weylgpd/braiding.hpp"
#include "weylgpd/groupoid.hpp"
#include "weylgpd/nichols_roots.hpp"
#include "weylgpd/pbw.hpp"
#include "weylgpd/super.hpp"

namespace weylgpd {

using Json = nlohmann::ordered_json;

/// First word of the first non-blank line: "nichols", "super", "roots" or "grs".
/// Throws ParseError for anything else.
std::string input_kind(std::string_view text);

/// "nichols θ m" then θ rows of θ scalar literals. '#' starts a comment.
BraidingMatrix parse_nichols(std::string_view text);

/// "super θ ℓ", a line of θ parity signs, then θ rows of θ field literals.
SuperPair parse_super(std::string_view text);

/// "roots θ" then whitespace-separated roots in multiplicative notation.
std::vector<Root> parse_root_list(std::string_view text);

/// Objects and roots read from a "grs θ" bundle file:
///
///   grs 3
///   object x
///   cartan
///   2 -1 0
///   ...
///   rho x x y
///   roots 1 12 2 ...
///
/// keys hold the object names in file order; the seed is the first object.
struct GrsBundle {
  CartanScheme scheme;
  RootBundle positives;
};
GrsBundle parse_grs_bundle(std::string_view text);

Json root_json(const Root& r);
Json to_json(const RootSystemResult& r);
Json to_json(const SuperRootResult& r);
Json to_json(const LyndonTable& lyndon, const HyperwordTable& hyper);
Json to_json(const CartanScheme& scheme, const GroupoidSummary& summary);
Json to_json(const CartanScheme& scheme, const GrsReport& report);

std::string to_text(const RootSystemResult& r);
std::string to_text(const SuperRootResult& r);
std::string to_text(const LyndonTable& lyndon, const HyperwordTable& hyper);
std::string to_text(const CartanScheme& scheme, const GroupoidSummary& summary);
std::string to_text(const CartanScheme& scheme, const GrsReport& report);

/// "1, 12, 12^2" style list.
std::string render_roots(const std::vector<Root>& roots);

}  // namespace weylgpd

#endif  // WEYLGPD_IO_HPP
