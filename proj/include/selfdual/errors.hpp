#pragma once

#include <stdexcept>
#include <string>

namespace selfdual {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A rotation system whose dart orbits do not satisfy V - E + F = 2.
struct NonPlanarEmbedding : Error { using Error::Error; };

// Rotation lists with asymmetric incidences (u lists v more often than v lists u).
struct InconsistentRotation : Error { using Error::Error; };

// An operation requiring a 2-connected map was given something weaker.
struct NotTwoConnected : Error { using Error::Error; };

// An operation requiring a quadrangulation met a face that is not a 4-gon,
// or input without the bipartition data it needs.
struct NotQuadrangulation : Error { using Error::Error; };

// The named vertex pair is not an edge of the map.
struct NotAnEdge : Error { using Error::Error; };

// The named vertex does not lie on the boundary walk of the required face.
struct VertexNotOnFace : Error { using Error::Error; };

// The six-vertex cursor of a labelled radial is missing or does not form
// the hexagon-plus-chord configuration the surgery needs.
struct InvalidCursor : Error { using Error::Error; };

// A degree tuple with an entry below 4, or with too few entries for the operation.
struct InvalidTuple : Error { using Error::Error; };

// A numeric parameter outside an operation's documented range.
struct InvalidParameter : Error { using Error::Error; };

// A structural precondition of an operation does not hold on the given map.
struct PreconditionViolated : Error { using Error::Error; };

// The map is not polyhedral (simple + 3-connected + planar), so the request
// is undefined.
struct NotPolyhedral : Error { using Error::Error; };

// The labelled radial lacks the per-class index labelling the check needs.
struct MissingLabels : Error { using Error::Error; };

// The construction record lacks the grown-vertex history the check needs.
struct LabelsUnavailable : Error { using Error::Error; };

// An enumeration was requested above the configured order cap.
struct OrderCapExceeded : Error { using Error::Error; };

// A degree sequence with odd sum cannot be realised by any graph.
struct OddDegreeSum : Error { using Error::Error; };

}  // namespace selfdual
