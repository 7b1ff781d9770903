#pragma once

#include <map>

#include "cellar/catalog.hpp"

namespace cellar::catalog_detail {

struct PresBuilder {
  Presentation p;
  explicit PresBuilder(std::uint32_t prime = 0);
  PresBuilder& prm(const std::string& name, const std::string& value,
                   std::vector<std::string> forbidden);
  PresBuilder& v(const std::string& name);
  PresBuilder& a(const std::string& name, const std::string& from, const std::string& to);
  PresBuilder& r(const std::string& dsl);
  Presentation fin();
};

long param_long(const std::map<std::string, std::string>& params, const std::string& key, long def);
std::string param_str(const std::map<std::string, std::string>& params, const std::string& key,
                      const std::string& def);
void reject_unknown_params(const std::map<std::string, std::string>& params,
                           const std::vector<std::string>& known);
Presentation rename_presentation(const Presentation& in,
                                 const std::map<std::string, std::string>& vmap,
                                 const std::map<std::string, std::string>& amap);

}  // namespace cellar::catalog_detail
