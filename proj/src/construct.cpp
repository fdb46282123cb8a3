#include "ffnets/construct.hpp"

namespace ffnets {

const char* variant_token(Variant v) {
  switch (v) {
    case Variant::genus0: return "genus0";
    case Variant::gpos: return "gpos";
    case Variant::xing: return "xing";
  }
  return "";
}

Variant parse_variant(const std::string& token) {
  if (token == "genus0") return Variant::genus0;
  if (token == "gpos") return Variant::gpos;
  if (token == "xing") return Variant::xing;
  throw std::invalid_argument("unknown variant: " + token);
}

}  // namespace ffnets
