#pragma once

#include <cstdint>
#include <variant>

#include "numrange/essrange.hpp"

namespace numrange {

// Deterministic splitmix64 generator so the random gallery items are
// reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double next_uniform(); // (0, 1)
    double next_gaussian();
    cplx next_complex_gaussian();

private:
    std::uint64_t state_;
};

struct DiskTruth {
    cplx center;
    double radius;
};

struct EllipseTruth {
    cplx center;
    double semi_major;
    double semi_minor;
    double tilt;
};

// Whatever is known in closed form about an item's numerical range.
struct GalleryTruth {
    std::string summary;
    std::optional<std::vector<cplx>> hull;
    std::optional<DiskTruth> disk;
    std::optional<EllipseTruth> ellipse;
    std::optional<EssOracle> essential;
    std::vector<cplx> eigenvalues;
};

struct GalleryItem {
    std::string name;
    std::variant<ComplexMatrix, OperatorFamily> object;
    GalleryTruth truth;

    bool is_family() const { return object.index() == 1; }
    const ComplexMatrix& matrix() const { return std::get<ComplexMatrix>(object); }
    const OperatorFamily& family() const { return std::get<OperatorFamily>(object); }
    // the matrix itself, or the family's leading section
    ComplexMatrix section(int n) const;
};

// Build an item from a descriptor like "jordan:12", "ellipse2x2:1:0.5" or
// "random:8:42"; sizes default to default_n when omitted. Throws ParseError
// for unknown names or malformed parameters.
GalleryItem gallery_build(const std::string& spec, int default_n = 64);

std::vector<std::string> gallery_names();

} // namespace numrange
