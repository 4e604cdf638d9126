//! Certified identification of stationary colimits against the model
//! catalog `Z[1/2]^s + Z^r + sum Z/d_i`.
//!
//! The classifier computes candidate ranks from the stable quotient of the
//! system, exhibits generators, and then certifies: the defining relations
//! of the model, independence of the generators at each checked halving
//! depth, and surjectivity level by level. Anything that fails to certify
//! is reported as Undetermined with diagnostics, never guessed.

use crate::error::LimitError;
use crate::system::{ColimitElement, StationarySystem};
use exact_abelian::{
    lattice_includes, preimage_lattice, saturation, snf, AbHom, FGAbelianGroup, IntMatrix, Solver,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Bounds for the certification loops.
#[derive(Clone, Copy, Debug)]
pub struct CertBounds {
    pub independence_depths: usize,
    pub surjectivity_levels: usize,
}

impl Default for CertBounds {
    fn default() -> Self {
        CertBounds {
            independence_depths: 12,
            surjectivity_levels: 12,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Certification {
    pub t_star: usize,
    pub independence_depths: usize,
    pub surjectivity_levels: usize,
}

/// A certified description of the colimit of a stationary system.
#[derive(Clone, Debug)]
pub struct ColimitDescriptor {
    pub dyadic_rank: usize,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    pub dyadic_gens: Vec<ColimitElement>,
    pub free_gens: Vec<ColimitElement>,
    pub torsion_gens: Vec<ColimitElement>,
    pub cert: Certification,
}

impl ColimitDescriptor {
    pub fn trivial(cert: Certification) -> ColimitDescriptor {
        ColimitDescriptor {
            dyadic_rank: 0,
            free_rank: 0,
            torsion: Vec::new(),
            dyadic_gens: Vec::new(),
            free_gens: Vec::new(),
            torsion_gens: Vec::new(),
            cert,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.dyadic_rank == 0 && self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Rank after tensoring with the rationals.
    pub fn rational_rank(&self) -> usize {
        self.dyadic_rank + self.free_rank
    }

    pub fn model_string(&self) -> String {
        let mut parts = Vec::new();
        match self.dyadic_rank {
            0 => {}
            1 => parts.push("Z[1/2]".to_string()),
            s => parts.push(format!("Z[1/2]^{}", s)),
        }
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{}", d));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    pub fn all_generators(&self) -> Vec<(&'static str, &ColimitElement)> {
        let mut out = Vec::new();
        for g in &self.dyadic_gens {
            out.push(("dyadic", g));
        }
        for g in &self.free_gens {
            out.push(("free", g));
        }
        for g in &self.torsion_gens {
            out.push(("torsion", g));
        }
        out
    }
}

/// Identify the colimit of the system within the catalog and certify.
pub fn classify_colimit(
    sys: &StationarySystem,
    bounds: CertBounds,
) -> Result<ColimitDescriptor, LimitError> {
    let g = sys.group();
    let a = sys.connector();
    let t_star = sys.stabilization_exponent();
    let cert = Certification {
        t_star,
        independence_depths: bounds.independence_depths,
        surjectivity_levels: bounds.surjectivity_levels,
    };
    if g.is_trivial() {
        return Ok(ColimitDescriptor::trivial(cert));
    }

    // stable quotient: G / ker(A^{t*}), on which the connector is injective
    let qbar = FGAbelianGroup::cokernel_presentation(sys.stable_kernel_lattice());
    let abar = induced_on_quotient(&qbar, a.matrix())?;
    if !abar.kernel().group.is_trivial() {
        return Err(LimitError::Undetermined {
            stage: "stable quotient",
            details: "connector not injective on the stable quotient".into(),
        });
    }

    let torsion: Vec<BigInt> = qbar.torsion().to_vec();
    let tq = torsion.len();
    let m = qbar.free_rank();

    // candidate dyadic/free split of the free part, read off 2-adically
    let (r, s) = if m == 0 {
        (0, 0)
    } else {
        let af = abar.matrix().submatrix(tq, tq, m, m);
        let det = af.det().abs();
        if det.is_zero() {
            return Err(LimitError::Undetermined {
                stage: "free part",
                details: "free-part connector is singular".into(),
            });
        }
        let mut odd = det.clone();
        let two = BigInt::from(2);
        while odd.mod_floor(&two).is_zero() {
            odd /= &two;
        }
        if !odd.is_one() {
            return Err(LimitError::Undetermined {
                stage: "free part",
                details: format!(
                    "free-part determinant {} has odd factor {}; outside the catalog",
                    det, odd
                ),
            });
        }
        let power = snf(&af.pow(m));
        let r = power
            .diagonal()
            .iter()
            .filter(|d| d.mod_floor(&two).is_one())
            .count();
        (r, m - r)
    };

    // generators: torsion from the stable quotient
    let torsion_gens: Vec<ColimitElement> = (0..tq)
        .map(|i| sys.element(0, qbar.lift_gen(i)))
        .collect();

    // dyadic generators: stable eigenlattice of "connector = doubling"
    let dim = g.dim();
    let (dyadic_gens, dyadic_proj) = if s > 0 {
        let doubling = a.matrix() - &IntMatrix::identity(dim).scaled(&BigInt::from(2));
        let stable = a.matrix().pow(t_star);
        let half_lattice = preimage_lattice(&(&stable * &doubling), &g.moduli());
        // project to the free coordinates of the stable quotient
        let mut proj_cols = Vec::new();
        for j in 0..half_lattice.cols() {
            let q = qbar.project(&half_lattice.col(j));
            proj_cols.push(q[tq..].to_vec());
        }
        let proj = IntMatrix::from_cols(&proj_cols, m);
        let ps = snf(&proj);
        if ps.rank() < s {
            return Err(LimitError::Undetermined {
                stage: "dyadic discovery",
                details: format!(
                    "halving eigenlattice has free rank {} but {} dyadic summands expected",
                    ps.rank(),
                    s
                ),
            });
        }
        // columns of (half_lattice * V) ordered by the Smith form give
        // representatives whose projections form a basis of the image
        let combined = &half_lattice * &ps.v;
        let gens: Vec<ColimitElement> = (0..s).map(|j| sys.element(0, combined.col(j))).collect();
        let proj_basis = (&proj * &ps.v).submatrix(0, 0, m, s);
        (gens, Some(proj_basis))
    } else {
        (Vec::new(), None)
    };

    // free generators: a complement of the (saturated) dyadic directions
    let free_gens: Vec<ColimitElement> = if r > 0 {
        let quot = match &dyadic_proj {
            Some(p) => {
                let sat = saturation(p);
                // the index of the dyadic lattice in its saturation must be a
                // power of two, else halving cannot absorb it
                let idx = index_invariants(&sat, p);
                let two = BigInt::from(2);
                for d in idx {
                    let mut v = d;
                    while v.mod_floor(&two).is_zero() {
                        v /= &two;
                    }
                    if !v.is_one() {
                        return Err(LimitError::Undetermined {
                            stage: "dyadic discovery",
                            details: "dyadic lattice has odd index in its saturation".into(),
                        });
                    }
                }
                FGAbelianGroup::cokernel_presentation(&sat)
            }
            None => FGAbelianGroup::free(m),
        };
        if quot.free_rank() != r || !quot.torsion().is_empty() {
            return Err(LimitError::Undetermined {
                stage: "free discovery",
                details: format!(
                    "complement of dyadic directions is {}, expected Z^{}",
                    quot.group_string(),
                    r
                ),
            });
        }
        (0..r)
            .map(|i| {
                let in_free = quot.lift_gen(i); // in Z^m
                let mut normal = vec![BigInt::zero(); qbar.dim()];
                normal[tq..].clone_from_slice(&in_free);
                sys.element(0, qbar.lift(&normal))
            })
            .collect()
    } else {
        Vec::new()
    };

    let desc = ColimitDescriptor {
        dyadic_rank: s,
        free_rank: r,
        torsion,
        dyadic_gens,
        free_gens,
        torsion_gens,
        cert,
    };
    certify(sys, &desc, bounds)?;
    Ok(desc)
}

/// Index invariants of a sublattice in its saturation (both as columns).
fn index_invariants(sat: &IntMatrix, sub: &IntMatrix) -> Vec<BigInt> {
    let solver = Solver::new(sat);
    let mut cols = Vec::new();
    for j in 0..sub.cols() {
        cols.push(solver.solve(&sub.col(j)).expect("sublattice of saturation"));
    }
    let coeffs = IntMatrix::from_cols(&cols, sat.cols());
    FGAbelianGroup::cokernel_presentation(&coeffs)
        .torsion()
        .to_vec()
}

fn induced_on_quotient(qbar: &FGAbelianGroup, matrix: &IntMatrix) -> Result<AbHom, LimitError> {
    let mut cols = Vec::new();
    for i in 0..qbar.dim() {
        let amb = qbar.lift_gen(i);
        let img = matrix.apply(&amb);
        cols.push(qbar.project(&img));
    }
    let m = IntMatrix::from_cols(&cols, qbar.dim());
    AbHom::new(qbar.clone(), qbar.clone(), m).map_err(|e| LimitError::Undetermined {
        stage: "stable quotient",
        details: format!("induced connector ill-defined: {}", e),
    })
}

/// Certify relations, independence and surjectivity of the generators.
fn certify(
    sys: &StationarySystem,
    desc: &ColimitDescriptor,
    bounds: CertBounds,
) -> Result<(), LimitError> {
    let g = sys.group();
    let a = sys.connector();
    let t_star = sys.stabilization_exponent();

    // (a) model relations
    for (i, d) in desc.torsion.iter().enumerate() {
        if !sys.verify_relation(&[(d.clone(), desc.torsion_gens[i].clone())]) {
            return Err(LimitError::Undetermined {
                stage: "relations",
                details: format!("torsion generator {} does not satisfy {} g = 0", i, d),
            });
        }
    }
    for (j, gen) in desc.dyadic_gens.iter().enumerate() {
        // (n, v) = 2 (n+1, v), i.e. A v ~ 2 v
        let once = ColimitElement::new(gen.level + 1, gen.rep.clone());
        if !sys.verify_relation(&[
            (BigInt::one(), gen.clone()),
            (BigInt::from(-2), once),
        ]) {
            return Err(LimitError::Undetermined {
                stage: "relations",
                details: format!("dyadic generator {} has no halving family", j),
            });
        }
    }

    let gens: Vec<(&'static str, ColimitElement)> = desc
        .torsion_gens
        .iter()
        .map(|e| ("torsion", e.clone()))
        .chain(desc.free_gens.iter().map(|e| ("free", e.clone())))
        .chain(desc.dyadic_gens.iter().map(|e| ("dyadic", e.clone())))
        .collect();
    let k = gens.len();
    if k == 0 {
        // trivial model: every element at the checked levels must vanish
        for n in 0..=bounds.surjectivity_levels {
            for i in 0..g.dim() {
                let e = sys.element(n, g.gen_vec(i));
                if !sys.is_zero(&e) {
                    return Err(LimitError::Undetermined {
                        stage: "surjectivity",
                        details: format!("nonzero element at level {} but model is trivial", n),
                    });
                }
            }
        }
        return Ok(());
    }

    let stable = a.matrix().pow(t_star);
    let moduli = g.moduli();

    // (b) independence at each halving depth
    for depth in 0..=bounds.independence_depths {
        let common = gens
            .iter()
            .map(|(kind, e)| if *kind == "dyadic" { e.level + depth } else { e.level })
            .max()
            .unwrap();
        let mut cols = Vec::new();
        for (kind, e) in &gens {
            let lvl = if *kind == "dyadic" { e.level + depth } else { e.level };
            let pushed = sys.push(&ColimitElement::new(lvl, e.rep.clone()), common);
            cols.push(pushed.rep);
        }
        let w = IntMatrix::from_cols(&cols, g.dim());
        let rel = preimage_lattice(&(&stable * &w), &moduli);
        // expected relation lattice: d_i on torsion generator coordinates
        let mut expected = IntMatrix::zeros(k, desc.torsion.len());
        for (i, d) in desc.torsion.iter().enumerate() {
            expected[(i, i)] = d.clone();
        }
        if !lattice_includes(&expected, &rel) {
            return Err(LimitError::Undetermined {
                stage: "independence",
                details: format!("unexpected relation among generators at halving depth {}", depth),
            });
        }
    }

    // (c) surjectivity level by level: every level generator is an integer
    // combination of the model generators (dyadic ones taken deep enough)
    for n in 0..=bounds.surjectivity_levels {
        let common = n + t_star + 1 + gens.iter().map(|(_, e)| e.level).max().unwrap();
        let mut cols = Vec::new();
        for (kind, e) in &gens {
            let lvl = if *kind == "dyadic" { common } else { e.level };
            let pushed = sys.push(&ColimitElement::new(lvl, e.rep.clone()), common);
            cols.push(pushed.rep);
        }
        let mut w = IntMatrix::from_cols(&cols, g.dim());
        // allow corrections by anything that dies in the colimit
        w = w.hstack(sys.stable_kernel_lattice());
        let solver = Solver::new(&w);
        for i in 0..g.dim() {
            let target = sys.push(&sys.element(n, g.gen_vec(i)), common);
            if solver.solve(&target.rep).is_none() {
                return Err(LimitError::Undetermined {
                    stage: "surjectivity",
                    details: format!(
                        "level-{} generator {} not expressible in the model generators",
                        n, i
                    ),
                });
            }
        }
    }
    Ok(())
}
