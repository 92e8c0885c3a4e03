//! Dense order-2 and order-3 tensors with factor permutations and
//! factorwise linear maps.
//!
//! A `Tensor2` with dims `(p, q)` stores coefficients of Σ c[i,j] b_i ⊗ c_j
//! over fixed bases; it doubles as the coefficient matrix of a linear map
//! from the dual of the right factor into the left factor.  `Tensor3` is the
//! analogous order-3 array, indexed lexicographically.

use num_traits::Zero;

use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// One factor of a factorwise map: either the identity or an explicit matrix.
#[derive(Debug, Clone, Copy)]
pub enum FactorMap<'a> {
    Identity,
    Map(&'a Matrix),
}

impl FactorMap<'_> {
    fn out_dim(&self, in_dim: usize) -> Result<usize, Error> {
        match self {
            FactorMap::Identity => Ok(in_dim),
            FactorMap::Map(m) => {
                if m.cols() != in_dim {
                    Err(Error::DimMismatch(format!(
                        "factor map expects dim {}, tensor factor has dim {in_dim}",
                        m.cols()
                    )))
                } else {
                    Ok(m.rows())
                }
            }
        }
    }

    fn coeff(&self, out: usize, inp: usize) -> Option<Scalar> {
        match self {
            FactorMap::Identity => (out == inp).then(|| Scalar::from_integer(1.into())),
            FactorMap::Map(m) => Some(m.get(out, inp).clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor2 {
    dim_left: usize,
    dim_right: usize,
    coeffs: Vec<Scalar>,
}

impl Tensor2 {
    pub fn zeros(dim_left: usize, dim_right: usize) -> Self {
        Self {
            dim_left,
            dim_right,
            coeffs: vec![Scalar::zero(); dim_left * dim_right],
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.dim_left, self.dim_right)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[i * self.dim_right + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.coeffs[i * self.dim_right + j] = v;
    }

    pub fn add_assign_at(&mut self, i: usize, j: usize, v: &Scalar) {
        self.coeffs[i * self.dim_right + j] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Tensor2) -> Result<Tensor2, Error> {
        if self.dims() != other.dims() {
            return Err(Error::DimMismatch("tensor2 add".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Tensor2) -> Result<Tensor2, Error> {
        if self.dims() != other.dims() {
            return Err(Error::DimMismatch("tensor2 sub".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Tensor2 {
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a = -a.clone();
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Tensor2 {
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a *= c;
        }
        out
    }

    /// The switch isomorphism τ(v ⊗ w) = w ⊗ v.
    pub fn switch(&self) -> Tensor2 {
        let mut out = Tensor2::zeros(self.dim_right, self.dim_left);
        for i in 0..self.dim_left {
            for j in 0..self.dim_right {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Reindex by a permutation of the two factors.
    ///
    /// `perm[k]` names the input factor carried by output slot `k`, so
    /// `[1, 0]` is τ and `[0, 1]` is the identity.
    pub fn permute(&self, perm: [usize; 2]) -> Result<Tensor2, Error> {
        match perm {
            [0, 1] => Ok(self.clone()),
            [1, 0] => Ok(self.switch()),
            _ => Err(Error::ArityMismatch(format!(
                "invalid permutation {perm:?} of 2 factors"
            ))),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.dim_left == self.dim_right && *self == self.switch()
    }

    pub fn is_skew(&self) -> bool {
        self.dim_left == self.dim_right && *self == self.switch().neg()
    }

    /// Applies `(f ⊗ g)` factorwise.
    pub fn apply_factorwise(&self, f: FactorMap, g: FactorMap) -> Result<Tensor2, Error> {
        let out_l = f.out_dim(self.dim_left)?;
        let out_r = g.out_dim(self.dim_right)?;
        let mut out = Tensor2::zeros(out_l, out_r);
        for i in 0..self.dim_left {
            for j in 0..self.dim_right {
                let c = self.get(i, j);
                if c.is_zero() {
                    continue;
                }
                match (&f, &g) {
                    (FactorMap::Identity, FactorMap::Identity) => {
                        out.add_assign_at(i, j, c);
                    }
                    _ => {
                        for a in 0..out_l {
                            let Some(fa) = f.coeff(a, i) else { continue };
                            if fa.is_zero() {
                                continue;
                            }
                            for b in 0..out_r {
                                let Some(gb) = g.coeff(b, j) else { continue };
                                if gb.is_zero() {
                                    continue;
                                }
                                out.add_assign_at(a, b, &(&fa * &gb * c));
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Nonzero entries in lexicographic index order, for witnesses.
    pub fn support(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim_left {
            for j in 0..self.dim_right {
                if !self.get(i, j).is_zero() {
                    out.push((i, j, self.get(i, j).clone()));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dims: [usize; 3],
    coeffs: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(dims: [usize; 3]) -> Self {
        Self {
            dims,
            coeffs: vec![Scalar::zero(); dims[0] * dims[1] * dims[2]],
        }
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.idx(i, j, k);
        self.coeffs[n] = v;
    }

    pub fn add_assign_at(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let n = self.idx(i, j, k);
        self.coeffs[n] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Tensor3) -> Result<Tensor3, Error> {
        if self.dims != other.dims {
            return Err(Error::DimMismatch("tensor3 add".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Tensor3) -> Result<Tensor3, Error> {
        if self.dims != other.dims {
            return Err(Error::DimMismatch("tensor3 sub".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    /// Reindex by a permutation of the three factors.
    ///
    /// `perm[k]` names the input factor carried by output slot `k`.  The
    /// cyclic shift σ(x ⊗ y ⊗ z) = y ⊗ z ⊗ x is `[1, 2, 0]`.
    pub fn permute(&self, perm: [usize; 3]) -> Result<Tensor3, Error> {
        let mut seen = [false; 3];
        for &p in &perm {
            if p > 2 || seen[p] {
                return Err(Error::ArityMismatch(format!(
                    "invalid permutation {perm:?} of 3 factors"
                )));
            }
            seen[p] = true;
        }
        // inv[p] = output slot receiving input factor p
        let mut inv = [0usize; 3];
        for (slot, &p) in perm.iter().enumerate() {
            inv[p] = slot;
        }
        let out_dims = [self.dims[perm[0]], self.dims[perm[1]], self.dims[perm[2]]];
        let mut out = Tensor3::zeros(out_dims);
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    let c = self.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let src = [i, j, k];
                    let mut dst = [0usize; 3];
                    for p in 0..3 {
                        dst[inv[p]] = src[p];
                    }
                    out.set(dst[0], dst[1], dst[2], c.clone());
                }
            }
        }
        Ok(out)
    }

    /// The cyclic shift σ(x ⊗ y ⊗ z) = y ⊗ z ⊗ x.
    pub fn cyclic(&self) -> Tensor3 {
        self.permute([1, 2, 0]).expect("fixed valid permutation")
    }

    /// Applies `(f ⊗ g ⊗ h)` factorwise.
    pub fn apply_factorwise(
        &self,
        f: FactorMap,
        g: FactorMap,
        h: FactorMap,
    ) -> Result<Tensor3, Error> {
        let out0 = f.out_dim(self.dims[0])?;
        let out1 = g.out_dim(self.dims[1])?;
        let out2 = h.out_dim(self.dims[2])?;
        let mut out = Tensor3::zeros([out0, out1, out2]);
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    let c = self.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    for a in 0..out0 {
                        let Some(fa) = f.coeff(a, i) else { continue };
                        if fa.is_zero() {
                            continue;
                        }
                        for b in 0..out1 {
                            let Some(gb) = g.coeff(b, j) else { continue };
                            if gb.is_zero() {
                                continue;
                            }
                            let fg = &fa * &gb;
                            for d in 0..out2 {
                                let Some(hd) = h.coeff(d, k) else { continue };
                                if hd.is_zero() {
                                    continue;
                                }
                                out.add_assign_at(a, b, d, &(&fg * &hd * c));
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Nonzero entries in lexicographic index order, for witnesses.
    pub fn support(&self) -> Vec<([usize; 3], Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    if !self.get(i, j, k).is_zero() {
                        out.push(([i, j, k], self.get(i, j, k).clone()));
                    }
                }
            }
        }
        out
    }
}
