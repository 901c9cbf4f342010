#pragma once

#include "run_config.hpp"

namespace lgbec::cli {

// Each command writes its files under rc.out_dir and returns the number of
// rows that carry an error flag.
int cmd_tc_sweep(const RunConfig& rc);
int cmd_levels(const RunConfig& rc);
int cmd_scattering(const RunConfig& rc);
int cmd_waists(const RunConfig& rc);
int cmd_growth(const RunConfig& rc);
int cmd_shapes(const RunConfig& rc);
int cmd_species_check(const RunConfig& rc);

}  // namespace lgbec::cli
