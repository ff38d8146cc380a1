#include "amlink/fixtures.hpp"

#include <array>
#include <string>

#include "amlink/errors.hpp"
#include "amlink/table_io.hpp"

namespace amlink {

namespace detail {
extern const std::string_view kSubstituentTableCsv;
}

Site site_from_string(std::string_view text) {
  if (text == "para") {
    return Site::Para;
  }
  if (text == "meta") {
    return Site::Meta;
  }
  throw Error("unknown fixture '" + std::string(text) + "' (expected para|meta)");
}

std::string_view to_string(Site site) noexcept {
  return site == Site::Para ? "para" : "meta";
}

std::string_view substituent_table_csv() noexcept {
  return detail::kSubstituentTableCsv;
}

Dataset substituent_table() {
  return parse_table(substituent_table_csv());
}

Dataset substituent_dataset(Site site) {
  static constexpr std::array<std::size_t, 2> kPara{0, 1};
  static constexpr std::array<std::size_t, 2> kMeta{2, 3};
  return substituent_table().select_columns(site == Site::Para ? kPara : kMeta);
}

}  // namespace amlink
