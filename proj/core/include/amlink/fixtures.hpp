#pragma once

#include <string_view>

#include "amlink/dataset.hpp"

namespace amlink {

/// Substitution site of the bundled substituent table.
enum class Site { Para, Meta };

Site site_from_string(std::string_view text);
std::string_view to_string(Site site) noexcept;

/// The bundled 25-substituent table (Hansch pi and Hammett sigma constants at
/// the para and meta positions), exactly as shipped in data/substituents.csv.
std::string_view substituent_table_csv() noexcept;

/// All four descriptor columns: pi_p, sigma_p, pi_m, sigma_m.
Dataset substituent_table();

/// The two columns of one site: (pi_p, sigma_p) or (pi_m, sigma_m).
Dataset substituent_dataset(Site site);

}  // namespace amlink
