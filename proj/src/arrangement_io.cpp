#include "arrtop/arrangement_io.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <vector>

#include "arrtop/error.hpp"

namespace arrtop {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Arrangement parse_arrangement(std::string_view text, DuplicatePolicy policy) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_dim = false;
  std::size_t dim = 0;
  std::vector<Hyperplane> hs;
  std::vector<std::size_t> source_line;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!have_dim) {
      if (toks[0] != "dim" || toks.size() != 2) fail(lineno, "expected 'dim <n>' before any hyperplane");
      try {
        Rat d = parse_rat(toks[1]);
        if (d.get_den() != 1 || d < 0 || d > 64) throw std::invalid_argument("range");
        dim = d.get_num().get_ui();
      } catch (const std::invalid_argument&) {
        fail(lineno, "dimension must be an integer between 0 and 64, got '" + toks[1] + "'");
      }
      have_dim = true;
      continue;
    }
    if (toks.size() != dim + 1) {
      fail(lineno, "expected " + std::to_string(dim + 1) + " numbers (" + std::to_string(dim) +
                       " coefficients and the right-hand side), found " + std::to_string(toks.size()));
    }
    std::vector<Rat> normal;
    Rat offset;
    for (std::size_t i = 0; i <= dim; ++i) {
      Rat v;
      try {
        v = parse_rat(toks[i]);
      } catch (const std::invalid_argument& e) {
        fail(lineno, e.what());
      }
      if (i < dim) normal.push_back(v); else offset = v;
    }
    try {
      hs.push_back(Hyperplane::make(std::move(normal), std::move(offset)));
    } catch (const InputError& e) {
      fail(lineno, e.what());
    }
    source_line.push_back(lineno);
  }
  if (!have_dim) throw InputError("line " + std::to_string(lineno) + ": missing 'dim <n>' line");
  if (policy == DuplicatePolicy::kReject) {
    for (std::size_t j = 0; j < hs.size(); ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (hs[i] == hs[j]) {
          fail(source_line[j], "hyperplane duplicates the one on line " + std::to_string(source_line[i]) +
                                   " (use --dedupe to drop repeats)");
        }
  }
  return Arrangement(dim, std::move(hs), policy);
}

std::string print_arrangement(const Arrangement& a) {
  std::string out = "dim " + std::to_string(a.dim()) + "\n";
  for (const auto& h : a.hyperplanes()) {
    for (const auto& c : h.normal) out += to_string(c) + " ";
    out += to_string(h.offset) + "\n";
  }
  return out;
}

std::string arrangement_digest(const Arrangement& a) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : print_arrangement(a)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace arrtop
