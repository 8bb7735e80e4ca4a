//! Benefit vocabulary, the three-valued rating scale, and total benefit
//! vectors.
//!
//! The vocabulary is the 25 classic usability/deployability/security
//! properties plus six additions: two usability properties (U9, U10) and
//! four mimicry-related security properties (M1-M4).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Property group, derivable from the identifier prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BenefitClass {
    Usability,
    Deployability,
    Security,
    Mimicry,
}

impl BenefitClass {
    pub fn name(self) -> &'static str {
        match self {
            BenefitClass::Usability => "Usability",
            BenefitClass::Deployability => "Deployability",
            BenefitClass::Security => "Security",
            BenefitClass::Mimicry => "Mimicry",
        }
    }

    fn prefix(self) -> char {
        match self {
            BenefitClass::Usability => 'U',
            BenefitClass::Deployability => 'D',
            BenefitClass::Security => 'S',
            BenefitClass::Mimicry => 'M',
        }
    }
}

macro_rules! benefits {
    ($( $variant:ident => ($class:ident, $num:literal, $name:literal) ),+ $(,)?) => {
        /// One of the 31 framework properties.
        ///
        /// Variants are declared in canonical column order (U1..U10, D1..D6,
        /// S1..S11, M1..M4); the derived ordering follows it.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum BenefitId {
            $( $variant ),+
        }

        impl BenefitId {
            pub const ALL: [BenefitId; 31] = [ $( BenefitId::$variant ),+ ];

            pub fn class(self) -> BenefitClass {
                match self {
                    $( BenefitId::$variant => BenefitClass::$class ),+
                }
            }

            /// Number within the class, e.g. 11 for S11.
            pub fn number(self) -> u8 {
                match self {
                    $( BenefitId::$variant => $num ),+
                }
            }

            pub fn display_name(self) -> &'static str {
                match self {
                    $( BenefitId::$variant => $name ),+
                }
            }
        }
    };
}

benefits! {
    U1 => (Usability, 1, "Memorywise-Effortless"),
    U2 => (Usability, 2, "Scalable-for-Users"),
    U3 => (Usability, 3, "Nothing-to-Carry"),
    U4 => (Usability, 4, "Physically-Effortless"),
    U5 => (Usability, 5, "Easy-to-Learn"),
    U6 => (Usability, 6, "Efficient-to-Use"),
    U7 => (Usability, 7, "Infrequent-Errors"),
    U8 => (Usability, 8, "Easy-Recovery-from-Loss"),
    U9 => (Usability, 9, "No-False-Rejects"),
    U10 => (Usability, 10, "Easy-to-Change-Credentials"),
    D1 => (Deployability, 1, "Accessible"),
    D2 => (Deployability, 2, "Negligible-Cost-per-User"),
    D3 => (Deployability, 3, "Server-Compatible"),
    D4 => (Deployability, 4, "Browser-Compatible"),
    D5 => (Deployability, 5, "Mature"),
    D6 => (Deployability, 6, "Non-Proprietary"),
    S1 => (Security, 1, "Resilient-to-Physical-Observation"),
    S2 => (Security, 2, "Resilient-to-Targeted-Impersonation"),
    S3 => (Security, 3, "Resilient-to-Throttled-Guessing"),
    S4 => (Security, 4, "Resilient-to-Unthrottled-Guessing"),
    S5 => (Security, 5, "Resilient-to-Internal-Observation"),
    S6 => (Security, 6, "Resilient-to-Leaks-from-Other-Verifiers"),
    S7 => (Security, 7, "Resilient-to-Phishing"),
    S8 => (Security, 8, "Resilient-to-Physical-Theft"),
    S9 => (Security, 9, "No-Trusted-Third-Party"),
    S10 => (Security, 10, "Requiring-Explicit-Consent"),
    S11 => (Security, 11, "Unlinkable"),
    M1 => (Mimicry, 1, "No-False-Accepts"),
    M2 => (Mimicry, 2, "Resilient-to-Infrequent-Capture-or-Intercept"),
    M3 => (Mimicry, 3, "Verifies-Non-Static-Information"),
    M4 => (Mimicry, 4, "Resilient-to-Spoofing"),
}

impl BenefitId {
    /// Position in canonical order, `0..31`.
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for BenefitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.class().prefix(), self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown benefit id `{0}`")]
pub struct UnknownBenefit(pub String);

impl FromStr for BenefitId {
    type Err = UnknownBenefit;

    /// Case-insensitive: `s3`, `S3` both parse.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || UnknownBenefit(s.to_string());
        let mut chars = s.chars();
        let class = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('U') => BenefitClass::Usability,
            Some('D') => BenefitClass::Deployability,
            Some('S') => BenefitClass::Security,
            Some('M') => BenefitClass::Mimicry,
            _ => return Err(err()),
        };
        let digits = chars.as_str();
        // no sign, no leading zero
        if digits.is_empty()
            || digits.starts_with('0')
            || !digits.bytes().all(|b| b.is_ascii_digit())
            || digits.len() > 2
        {
            return Err(err());
        }
        let number: u8 = digits.parse().map_err(|_| err())?;
        BenefitId::ALL
            .iter()
            .copied()
            .find(|b| b.class() == class && b.number() == number)
            .ok_or_else(err)
    }
}

/// Offering level of a single benefit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Rating {
    #[default]
    Absent,
    Partial,
    Full,
}

impl Rating {
    pub const ALL: [Rating; 3] = [Rating::Absent, Rating::Partial, Rating::Full];

    pub fn word(self) -> &'static str {
        match self {
            Rating::Absent => "absent",
            Rating::Partial => "partial",
            Rating::Full => "full",
        }
    }

    pub fn is_offered(self) -> bool {
        self != Rating::Absent
    }
}

impl fmt::Display for Rating {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rating `{0}` (expected full, partial or absent)")]
pub struct InvalidRating(pub String);

impl FromStr for Rating {
    type Err = InvalidRating;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(Rating::Full),
            "partial" => Ok(Rating::Partial),
            "absent" => Ok(Rating::Absent),
            _ => Err(InvalidRating(s.to_string())),
        }
    }
}

/// Total map from every [`BenefitId`] to a [`Rating`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BenefitVector([Rating; 31]);

impl BenefitVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_ratings(ratings: [Rating; 31]) -> Self {
        BenefitVector(ratings)
    }

    pub fn get(&self, b: BenefitId) -> Rating {
        self.0[b.index()]
    }

    pub fn set(&mut self, b: BenefitId, r: Rating) {
        self.0[b.index()] = r;
    }

    pub fn with(mut self, b: BenefitId, r: Rating) -> Self {
        self.set(b, r);
        self
    }

    pub fn ratings(&self) -> &[Rating; 31] {
        &self.0
    }

    /// All 31 entries in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (BenefitId, Rating)> + '_ {
        BenefitId::ALL.iter().map(move |&b| (b, self.get(b)))
    }

    /// Entries whose rating is not `Absent`.
    pub fn offered(&self) -> impl Iterator<Item = (BenefitId, Rating)> + '_ {
        self.iter().filter(|(_, r)| r.is_offered())
    }

    /// Pointwise `self >= other`.
    pub fn dominates(&self, other: &BenefitVector) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    /// Effective rating used in place of S6 when counting V2 sublevels:
    /// the lesser of S6 and S9, which guard against the same leak source.
    pub fn merged_s6(&self) -> Rating {
        self.get(BenefitId::S6).min(self.get(BenefitId::S9))
    }
}

/// Category column of a scheme; also the primary sort key in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    Password,
    Geolocation,
    Fingerprinting,
    Otp,
    Puf,
    Other,
}

impl Category {
    pub const ALL: [Category; 6] = [
        Category::Password,
        Category::Geolocation,
        Category::Fingerprinting,
        Category::Otp,
        Category::Puf,
        Category::Other,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Category::Password => "password",
            Category::Geolocation => "geolocation",
            Category::Fingerprinting => "fingerprinting",
            Category::Otp => "otp",
            Category::Puf => "puf",
            Category::Other => "other",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown category `{0}`")]
pub struct UnknownCategory(pub String);

impl FromStr for Category {
    type Err = UnknownCategory;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Category::ALL
            .iter()
            .copied()
            .find(|c| c.token() == s)
            .ok_or_else(|| UnknownCategory(s.to_string()))
    }
}

/// Lowercase scheme identifier matching `[a-z0-9_-]+`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchemeId(String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scheme id `{0}` (expected [a-z0-9_-]+)")]
pub struct InvalidSchemeId(pub String);

impl SchemeId {
    pub fn new(s: impl Into<String>) -> Result<Self, InvalidSchemeId> {
        let s = s.into();
        let ok = !s.is_empty()
            && s.bytes()
                .all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_' || b == b'-');
        if ok {
            Ok(SchemeId(s))
        } else {
            Err(InvalidSchemeId(s))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for SchemeId {
    type Err = InvalidSchemeId;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SchemeId::new(s)
    }
}

/// A named scheme and its rating vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeProfile {
    pub id: SchemeId,
    pub name: String,
    pub category: Category,
    pub vector: BenefitVector,
    pub notes: Option<String>,
}

impl SchemeProfile {
    pub fn new(id: SchemeId, name: impl Into<String>, category: Category) -> Self {
        SchemeProfile {
            id,
            name: name.into(),
            category,
            vector: BenefitVector::new(),
            notes: None,
        }
    }

    pub fn rating_of(&self, b: BenefitId) -> Rating {
        self.vector.get(b)
    }
}

/// Benefits that must all be `Full` to enter V2.
pub const V2_GATE: [BenefitId; 2] = [BenefitId::S3, BenefitId::S4];

/// Benefits that must all be `Full` to enter V3.
pub const V3_GATE: [BenefitId; 7] = [
    BenefitId::S1,
    BenefitId::S3,
    BenefitId::S4,
    BenefitId::S5,
    BenefitId::S6,
    BenefitId::S7,
    BenefitId::S9,
];

/// Security benefits that take the minimum, not the maximum, when schemes
/// are combined.
pub const SECURITY_MIN_EXCEPTIONS: [BenefitId; 2] = [BenefitId::S9, BenefitId::S11];

/// Benefits that never influence placement.
pub const PLACEMENT_NEUTRAL: [BenefitId; 3] = [BenefitId::S10, BenefitId::S11, BenefitId::M1];
