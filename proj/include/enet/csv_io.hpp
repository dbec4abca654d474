#pragma once

#include <filesystem>
#include <string>

#include "enet/types.hpp"

namespace enet {

// Loads a UTF-8 CSV with a header row and an all-numeric body. The named
// response column becomes y; every remaining column is a predictor, kept in
// file order. Parsing is locale-independent (std::from_chars). Any missing
// or non-numeric cell is a data_error naming the row and column; there is no
// silent row dropping. For binomial data the response must be exactly 0/1.
Dataset load_csv(const std::filesystem::path& path, const std::string& response, Family family);

}  // namespace enet
