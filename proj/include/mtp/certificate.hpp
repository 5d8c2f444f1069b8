#pragma once

#include "mtp/prover.hpp"

#include <string>

namespace mtp {

inline constexpr int kCertVersion = 1;

/// Deterministic JSON text (two-space indent, trailing newline). Rationals are
/// "num/den" strings and polynomials are coefficient arrays, lowest power first.
std::string serialize_certificate(const ProofCertificate& cert);

/// Throws DomainError on malformed input, including non-canonical rationals.
ProofCertificate parse_certificate(const std::string& text);

struct VerifyResult {
    bool ok = false;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Recomputes the whole proof from the original text and compares every
/// recorded item exactly: normalization, k-hat, plan admissibility, the Taylor
/// bounds and their validity radii, TP, and all positivity evidence.
VerifyResult verify_certificate(const ProofCertificate& cert);
VerifyResult verify_certificate_text(const std::string& text);

}  // namespace mtp
