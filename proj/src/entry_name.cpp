#include "bicross/entry_name.hpp"

#include <stdexcept>

namespace bicross {

EntryName parse_entry_name(std::string_view text) {
  EntryName out;
  auto q = text.find('?');
  out.base = std::string(text.substr(0, q));
  if (out.base.empty()) throw std::invalid_argument("empty entry name");
  if (q == std::string_view::npos) return out;
  std::string_view rest = text.substr(q + 1);
  while (!rest.empty()) {
    auto amp = rest.find('&');
    std::string_view kv = rest.substr(0, amp);
    auto eq = kv.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == kv.size())
      throw std::invalid_argument("malformed parameter '" + std::string(kv) + "' in " + std::string(text));
    std::string key(kv.substr(0, eq));
    if (out.params.count(key)) throw std::invalid_argument("duplicate parameter '" + key + "' in " + std::string(text));
    out.params[key] = std::string(kv.substr(eq + 1));
    if (amp == std::string_view::npos) break;
    rest = rest.substr(amp + 1);
  }
  return out;
}

std::string format_entry_name(const std::string& base, const Params& params) {
  std::string s = base;
  char sep = '?';
  for (const auto& [k, v] : params) {
    s += sep;
    s += k + "=" + to_string(v);
    sep = '&';
  }
  return s;
}

Params parse_params(const EntryName& name, const std::set<std::string>& allowed) {
  Params p;
  for (const auto& [k, v] : name.params) {
    if (!allowed.count(k)) throw std::invalid_argument("unknown parameter '" + k + "' for " + name.base);
    p[k] = parse_scalar(v);
  }
  return p;
}

}  // namespace bicross
