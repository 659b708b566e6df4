#pragma once

#include <string>
#include <vector>

namespace sskd {

struct VerifyOptions {
    int max_rows = 4;
    int max_degree = 6;
    std::string suite = "all";  // crystal | embedding | character | energy | all
};

struct VerifyReport {
    long long checks = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    bool ok() const { return violations.empty(); }
    void merge(const VerifyReport& o);
};

// Exhaustive sweeps over every weak composition with at most max_rows parts
// and degree at most max_degree that lies in the affine orbit of eta.
VerifyReport verify_crystal(int max_rows, int max_degree);
VerifyReport verify_embedding(int max_rows, int max_degree);
VerifyReport verify_character(int max_rows, int max_degree);
VerifyReport verify_energy(int max_rows, int max_degree);

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace sskd
