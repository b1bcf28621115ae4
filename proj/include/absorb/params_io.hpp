#ifndef ABSORB_PARAMS_IO_HPP
#define ABSORB_PARAMS_IO_HPP

#include "absorb/basic_code.hpp"
#include "absorb/improved.hpp"
#include "absorb/marker.hpp"
#include "absorb/multi.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>

namespace absorb::params_io {

using nlohmann::json;

// Every document carries "kind": basic | improved | marker | multi.
// Malformed documents raise DomainError.

// Flat record {kind, q, n, s[], t1, t2, d1, d2}; moduli only when not natural.
json to_json(const basic::BasicParams& p);
basic::BasicParams basic_from_json(const json& j);

json to_json(const improved::BlockSyndrome& s);
improved::BlockSyndrome block_syndrome_from_json(const json& j);

// {kind, q, n, delta, L, r1, r2, alpha, beta}.
json to_json(const improved::ImprovedParams& p);
improved::ImprovedParams improved_from_json(const json& j);

json to_json(const marker::MarkerParams& p);
marker::MarkerParams marker_from_json(const json& j);

/// Multi-absorption parameters as stored on disk: the improved base class,
/// t, the target label, Pmax and the separating function's label table.
struct MultiRecord {
    multi::MultiParams params;
    std::uint64_t pmax = 1;
};

json to_json(const multi::MultiParams& p, std::uint64_t pmax);
// Rebuilds a table-backed separating function; other contracts cannot be stored.
MultiRecord multi_from_json(const json& j);

json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& j);

} // namespace absorb::params_io

#endif
