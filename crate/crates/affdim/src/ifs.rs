//! Planar affine IFS data model: 2x2 linear parts, the singular value
//! function, word products, and the JSON input format.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A real (or complex, when instantiated with `Complex64`) 2x2 matrix,
/// row-major `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2<T = f64> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Scalar> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn det(&self) -> T {
        self.a * self.d - self.b * self.c
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        Mat2::new(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )
    }

    pub fn scale(&self, k: T) -> Self {
        Mat2::new(self.a * k, self.b * k, self.c * k, self.d * k)
    }

    pub fn entries(&self) -> [T; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn from_entries(e: [T; 4]) -> Self {
        Mat2::new(e[0], e[1], e[2], e[3])
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|x| x.is_finite())
    }

    /// Frobenius norm; a cheap scale for relative tolerances.
    pub fn frob(&self) -> f64 {
        self.entries()
            .iter()
            .map(|x| x.abs() * x.abs())
            .sum::<f64>()
            .sqrt()
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.abs() == 0.0 {
            return Err(Error::SingularMap(0));
        }
        let inv = T::one() / det;
        Ok(Mat2::new(
            self.d * inv,
            -self.b * inv,
            -self.c * inv,
            self.a * inv,
        ))
    }
}

impl Mat2<f64> {
    pub fn apply(&self, v: [f64; 2]) -> [f64; 2] {
        [
            self.a * v[0] + self.b * v[1],
            self.c * v[0] + self.d * v[1],
        ]
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(self.a, self.c, self.b, self.d)
    }

    pub fn is_entrywise_positive(&self) -> bool {
        self.a > 0.0 && self.b > 0.0 && self.c > 0.0 && self.d > 0.0
    }

    pub fn to_complex(&self) -> Mat2<Complex64> {
        Mat2::new(
            Complex64::new(self.a, 0.0),
            Complex64::new(self.b, 0.0),
            Complex64::new(self.c, 0.0),
            Complex64::new(self.d, 0.0),
        )
    }

    /// Operator 2-norm, i.e. the largest singular value. Well defined for
    /// singular matrices too, unlike [`Mat2::singular_values`].
    pub fn op_norm(&self) -> f64 {
        // Largest eigenvalue of A^T A: the + branch of the quadratic formula
        // is cancellation-free.
        let t = self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d;
        let det = self.det().abs();
        let disc = (t * t - 4.0 * det * det).max(0.0);
        (0.5 * (t + disc.sqrt())).sqrt()
    }

    /// Both singular values, largest first. The smaller one is produced as
    /// |det|/alpha1, which avoids the subtractive cancellation of the
    /// quadratic formula's − branch.
    pub fn singular_values(&self) -> Result<SingularPair> {
        let det = self.det();
        if det == 0.0 {
            return Err(Error::SingularMap(0));
        }
        let alpha1 = self.op_norm();
        let alpha2 = det.abs() / alpha1;
        Ok(SingularPair { alpha1, alpha2 })
    }

    /// The singular value function phi^s in the plane:
    /// alpha1^s on [0,1), alpha1^(2-s) |det|^(s-1) on [1,2], |det|^(s/2) above 2.
    pub fn phi_s(&self, s: f64) -> Result<f64> {
        if s < 0.0 {
            return Err(Error::NegativeExponent(s));
        }
        let sv = self.singular_values()?;
        let det = self.det().abs();
        if s < 1.0 {
            Ok(sv.alpha1.powf(s))
        } else if s <= 2.0 {
            Ok(sv.alpha1.powf(2.0 - s) * det.powf(s - 1.0))
        } else {
            Ok(det.powf(s / 2.0))
        }
    }
}

/// The two singular values of an invertible matrix, ordered decreasingly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SingularPair {
    pub alpha1: f64,
    pub alpha2: f64,
}

/// A finite word over the system's alphabet, read left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    indices: Vec<usize>,
}

impl Word {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::Parse("word must be nonempty".into()));
        }
        Ok(Word { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut indices = self.indices.clone();
        indices.extend_from_slice(&other.indices);
        Word { indices }
    }
}

#[derive(Deserialize, Serialize)]
struct RawMap {
    matrix: [[f64; 2]; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    translation: Option<[f64; 2]>,
}

#[derive(Deserialize, Serialize)]
struct RawSystem {
    maps: Vec<RawMap>,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<[[f64; 2]; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

/// An ordered family of invertible 2x2 linear parts with optional
/// translations (for attractor sampling) and an optional user-supplied
/// conjugating basis.
#[derive(Clone, Debug, PartialEq)]
pub struct IfsSystem {
    maps: Vec<Mat2>,
    translations: Option<Vec<[f64; 2]>>,
    basis: Option<Mat2>,
    label: Option<String>,
}

impl IfsSystem {
    pub fn new(maps: Vec<Mat2>) -> Result<Self> {
        Self::with_parts(maps, None, None, None)
    }

    pub fn with_parts(
        maps: Vec<Mat2>,
        translations: Option<Vec<[f64; 2]>>,
        basis: Option<Mat2>,
        label: Option<String>,
    ) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::EmptySystem);
        }
        for (i, m) in maps.iter().enumerate() {
            if !m.is_finite() {
                return Err(Error::NonFiniteEntry(i));
            }
            if m.det() == 0.0 {
                return Err(Error::SingularMap(i));
            }
        }
        if let Some(ts) = &translations {
            if ts.len() != maps.len() {
                return Err(Error::TranslationMismatch(ts.len().min(maps.len())));
            }
            for (i, t) in ts.iter().enumerate() {
                if !t[0].is_finite() || !t[1].is_finite() {
                    return Err(Error::NonFiniteEntry(i));
                }
            }
        }
        if let Some(b) = &basis {
            if !b.is_finite() || b.det() == 0.0 {
                return Err(Error::Parse("basis matrix is singular or non-finite".into()));
            }
        }
        Ok(IfsSystem {
            maps,
            translations,
            basis,
            label,
        })
    }

    /// Parse the JSON input document. Schema: `{"maps": [{"matrix": [[a,b],[c,d]],
    /// "translation": [x,y]?}, ...], "basis": [[..]]?, "label": "..."?}`.
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawSystem =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut maps = Vec::with_capacity(raw.maps.len());
        let mut translations: Vec<[f64; 2]> = Vec::new();
        let mut n_translated = 0usize;
        for (i, rm) in raw.maps.iter().enumerate() {
            let m = Mat2::new(
                rm.matrix[0][0],
                rm.matrix[0][1],
                rm.matrix[1][0],
                rm.matrix[1][1],
            );
            if !m.is_finite() {
                return Err(Error::NonFiniteEntry(i));
            }
            if m.det() == 0.0 {
                return Err(Error::SingularMap(i));
            }
            maps.push(m);
            if let Some(t) = rm.translation {
                translations.push(t);
                n_translated += 1;
            }
        }
        let translations = if n_translated == 0 {
            None
        } else if n_translated == raw.maps.len() {
            Some(translations)
        } else {
            // Report the first map lacking a translation.
            let idx = raw
                .maps
                .iter()
                .position(|rm| rm.translation.is_none())
                .unwrap_or(0);
            return Err(Error::TranslationMismatch(idx));
        };
        let basis = raw
            .basis
            .map(|b| Mat2::new(b[0][0], b[0][1], b[1][0], b[1][1]));
        IfsSystem::with_parts(maps, translations, basis, raw.label)
    }

    /// Serialize back to the input schema. Floats are rendered with 17
    /// significant digits so that `parse(serialize(sys)) == sys` exactly.
    pub fn serialize(&self) -> String {
        let raw = RawSystem {
            maps: self
                .maps
                .iter()
                .enumerate()
                .map(|(i, m)| RawMap {
                    matrix: [[m.a, m.b], [m.c, m.d]],
                    translation: self.translations.as_ref().map(|ts| ts[i]),
                })
                .collect(),
            basis: self.basis.map(|b| [[b.a, b.b], [b.c, b.d]]),
            label: self.label.clone(),
        };
        crate::report::to_json_17(&raw)
    }

    pub fn maps(&self) -> &[Mat2] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn translations(&self) -> Option<&[[f64; 2]]> {
        self.translations.as_deref()
    }

    pub fn basis(&self) -> Option<&Mat2> {
        self.basis.as_ref()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn all_entrywise_positive(&self) -> bool {
        self.maps.iter().all(Mat2::is_entrywise_positive)
    }

    /// Left-to-right product of the generators named by `word`.
    pub fn word_product(&self, word: &Word) -> Result<Mat2> {
        let mut acc: Option<Mat2> = None;
        for &i in word.indices() {
            let m = self.maps.get(i).ok_or(Error::WordIndexOutOfRange {
                index: i,
                alphabet: self.maps.len(),
            })?;
            acc = Some(match acc {
                None => *m,
                Some(p) => p.mul(m),
            });
        }
        acc.ok_or(Error::EmptySystem)
    }

    /// Replace every map A by B A B^{-1}. Translations are dropped (the
    /// conjugated system is a linear-parts object); the label is annotated.
    pub fn conjugate(&self, basis: &Mat2) -> Result<IfsSystem> {
        let b_inv = basis.inverse().map_err(|_| {
            Error::Parse("conjugating matrix is singular".into())
        })?;
        let maps = self
            .maps
            .iter()
            .map(|m| basis.mul(m).mul(&b_inv))
            .collect();
        let label = Some(match &self.label {
            Some(l) => format!("{l} (conjugated)"),
            None => "(conjugated)".to_string(),
        });
        IfsSystem::with_parts(maps, None, None, label)
    }
}
