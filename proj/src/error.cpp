#include "numwall/error.hpp"

namespace nw {

const char* errc_name(Errc c) noexcept {
    switch (c) {
    case Errc::ok: return "Ok";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_prime: return "NotPrime";
    case Errc::reducible_modulus: return "ReducibleModulus";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::insufficient_precision: return "InsufficientPrecision";
    case Errc::reducible_base: return "ReducibleBase";
    case Errc::zero_argument: return "ZeroArgument";
    case Errc::not_enough_coefficients: return "NotEnoughCoefficients";
    case Errc::out_of_support: return "OutOfSupport";
    case Errc::internal_inconsistency: return "InternalInconsistency";
    case Errc::non_square_zero_region: return "NonSquareZeroRegion";
    case Errc::not_complete: return "NotComplete";
    case Errc::non_geometric_edge: return "NonGeometricEdge";
    case Errc::too_short: return "TooShort";
    case Errc::embedding_incomplete: return "EmbeddingIncomplete";
    case Errc::insufficient_prefix: return "InsufficientPrefix";
    case Errc::invalid_portion: return "InvalidPortion";
    case Errc::out_of_regime: return "OutOfRegime";
    case Errc::unsupported_shape_pair: return "UnsupportedShapePair";
    case Errc::no_seed_with_blade: return "NoSeedWithBlade";
    case Errc::space_too_large: return "SpaceTooLarge";
    case Errc::overlapping_portions: return "OverlappingPortions";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    }
    return "Unknown";
}

} // namespace nw
