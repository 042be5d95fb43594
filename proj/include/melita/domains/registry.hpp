#pragma once

#include <melita/domains/toy_media.hpp>
#include <melita/domains/vector_pair.hpp>

#include <memory>
#include <string>

namespace melita::domains {

/// Everything needed to rebuild a domain instance. `domain_seed` overrides
/// the seed inside whichever parameter block is used.
struct DomainSpec {
    std::string name = "vector-pair";
    std::uint64_t domain_seed = 0;
    VectorPairParams vector_pair{};
    ToyMediaParams toy_media{};
};

std::vector<std::string> domain_names();

/// Throws std::invalid_argument for unknown names.
std::unique_ptr<Domain> make_domain(const DomainSpec& spec);

} // namespace melita::domains
