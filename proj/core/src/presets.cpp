#include "sdalab/presets.hpp"

#include <map>

#include "sdalab/error.hpp"

namespace sdalab::presets {

namespace {

const std::map<std::string, std::string, std::less<>>& table() {
  static const std::map<std::string, std::string, std::less<>> t = {
      {"sqrt2", R"({"n":1,"coords":[1,{"type":"algebraic","minpoly":[-2,0,1],"interval":["1","2"]}]})"},
      {"sqrt2-even",
       R"({"n":1,"coords":[1,{"type":"algebraic","minpoly":[-2,0,1],"interval":["1","2"]}],)"
       R"("S":{"type":"congruence","modulus":2,"residues":{"0":[0]}}})"},
      {"sqrt2-sublattice",
       R"({"n":1,"coords":[1,{"type":"algebraic","minpoly":[-2,0,1],"interval":["1","2"]}],)"
       R"("S":{"type":"sublattice","basis":[[1,1],[0,2]]}})"},
      {"cubic",
       R"({"n":2,"coords":[1,{"type":"algebraic","minpoly":[-2,0,0,1],"interval":["1","2"]},)"
       R"({"type":"algebraic","minpoly":[-4,0,0,1],"interval":["1","2"]}]})"},
      {"sqrt2-sqrt3",
       R"({"n":2,"coords":[1,{"type":"algebraic","minpoly":[-2,0,1],"interval":["1","2"]},)"
       R"({"type":"decimal","value":"1.73205080756887729352744634150587236694280525381038062805580"}]})"},
  };
  return t;
}

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

std::string config(std::string_view name) {
  auto it = table().find(name);
  if (it == table().end()) fail(Errc::SchemaError, "unknown preset '" + std::string(name) + "'");
  return it->second;
}

}  // namespace sdalab::presets
