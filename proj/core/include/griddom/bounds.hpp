#pragma once

// Pigeonhole infeasibility certificates.
//
// Singleton count: with n cells and t colors, at least 2t - n color classes are
// singletons, and a singleton class must sit on a vertex whose radius-k ball is
// the whole grid.
//
// Two ball: when the radius-k balls S, T around two opposite corners are
// disjoint and both have exactly t cells, each color appears exactly once in S
// and once in T. The color at p in S needs a third cell whenever two vertices
// outside B_k(p) are more than 2k apart. More such positions than n - 2t spare
// cells is a contradiction.

#include <optional>
#include <variant>
#include <vector>

#include "griddom/grid.hpp"

namespace griddom {

enum class CertificateKind { SingletonCount, TwoBall };

struct SingletonEvidence
{
    int cells = 0;
    int required_singletons = 0;
    /// The complete set of dominating vertices, row-major.
    std::vector<Vertex> dominating;
};

struct DistantPair
{
    Vertex first;
    Vertex second;
    int distance = 0;
};

struct QualifyingPosition
{
    Vertex position;
    DistantPair witness;
};

struct TwoBallEvidence
{
    Vertex corner_a;
    Vertex corner_b;
    /// Positions of the ball around corner_a whose color needs three cells.
    std::vector<QualifyingPosition> positions;
};

struct Certificate
{
    GridDims dims;
    int k;
    int t;
    std::variant<SingletonEvidence, TwoBallEvidence> evidence;

    CertificateKind kind() const noexcept
    {
        return evidence.index() == 0 ? CertificateKind::SingletonCount : CertificateKind::TwoBall;
    }
};

std::optional<Certificate> singleton_pigeonhole(const GridDims & dims, int k, int t);

/// Tries both diagonals and keeps the one with more qualifying positions.
std::optional<Certificate> two_ball_pigeonhole(const GridDims & dims, int k, int t);

/// Singleton first, then two ball.
std::optional<Certificate> find_certificate(const GridDims & dims, int k, int t);

/// Re-derives every claim from scratch. Returns false when a claim does not
/// hold or the inequality does not follow; throws ValidationError when the
/// certificate is structurally malformed.
bool check_certificate(const Certificate & c);

/// The same certificate for the transposed grid.
Certificate transpose(const Certificate & c);

} // namespace griddom
