//! Number-field and Galois data layer: finite groups, characters,
//! inertia-averaged power traces, and pluggable prime-spectrum / splitting
//! providers.

mod character;
mod datum;
mod group;
mod providers;
mod table;

pub use character::{
    dirichlet_characters, fundamental_discriminant, kronecker_character, kronecker_symbol,
    s3_characters, CharacterData,
};
pub use datum::{galois_datum, inertia_power_trace, invariant_dim, GaloisDatum, SplittingDatum};
pub use group::FiniteGroup;
pub use providers::{
    cyclotomic_split_shape, rational_primes, CubicOverQuadratic, CubicOverQuadraticExtension,
    CubicOverRationals, CubicS3, CubicSplittingField, CyclotomicExtension, CyclotomicField,
    CyclotomicGalois, Extension, GaloisProvider, PrimeSource, PureTable, QuadraticGalois,
    TableBacked, TrivialGalois,
};
pub use table::{SplittingTable, SplittingTableFile};
