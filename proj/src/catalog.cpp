#include "semieq/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace semieq {

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= 3; ++n) {
    auto all = enumerate_small(n);
    for (size_t i = 0; i < all.size(); ++i) {
      std::ostringstream name;
      name << "s" << n << "_" << std::setw(2) << std::setfill('0') << i + 1;
      out.push_back({name.str(), all[i]});
    }
  }
  Semigroup c2 = make_cyclic(2), n3 = make_nilpotent_monoid(3);
  out.push_back({"c2", c2});
  out.push_back({"c3", make_cyclic(3)});
  out.push_back({"c4", make_cyclic(4)});
  out.push_back({"v4", direct_product(c2, c2)});
  out.push_back({"n3", n3});
  out.push_back({"n4", make_nilpotent_monoid(4)});
  out.push_back({"lz2", make_left_zero(2)});
  out.push_back({"rz2", make_right_zero(2)});
  out.push_back({"sl2", make_semilattice_chain(2)});
  out.push_back({"chain3", make_semilattice_chain(3)});
  out.push_back({"chain4", make_semilattice_chain(4)});
  out.push_back({"c2xn3", direct_product(c2, n3)});
  return out;
}

std::vector<std::string> write_catalog(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw std::runtime_error("cannot create output directory " + dir + ": " +
                             ec.message());
  std::vector<std::string> names;
  for (const auto& entry : builtin_catalog()) {
    std::string fname = entry.name + ".sg";
    fs::path path = fs::path(dir) / fname;
    std::ofstream out(path);
    if (!out)
      throw std::runtime_error("cannot write catalog file " + path.string());
    out << serialize_semigroup(entry.sg);
    names.push_back(fname);
  }
  return names;
}

}  // namespace semieq
