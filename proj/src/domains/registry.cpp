#include <melita/domains/registry.hpp>

#include <stdexcept>

namespace melita::domains {

std::vector<std::string> domain_names()
{
    return {"vector-pair", "toy-media"};
}

std::unique_ptr<Domain> make_domain(const DomainSpec& spec)
{
    if (spec.name == "vector-pair") {
        auto params = spec.vector_pair;
        params.domain_seed = spec.domain_seed;
        return std::make_unique<VectorPairDomain>(params);
    }
    if (spec.name == "toy-media") {
        auto params = spec.toy_media;
        params.domain_seed = spec.domain_seed;
        return std::make_unique<ToyMediaDomain>(params);
    }
    throw std::invalid_argument("unknown domain '" + spec.name + "' (available: vector-pair, toy-media)");
}

} // namespace melita::domains
