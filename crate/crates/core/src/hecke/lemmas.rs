//! Closed-form multiplication rules for the `m_S` basis, each paired with a
//! checker that multiplies out both sides in `H_n`.

use super::algebra::Hecke;
use super::hom::{HomBasis, HomElem, HomSpaces};
use crate::coeff::{q_multinomial_poly, Laurent, Ring};
use crate::error::{Error, Result};
use crate::symgroup::{Composition, Perm};
use crate::tableau::{canonical_decomposition, lifts, refinement_groups, Tableau};

fn groups_for(nu: &Composition, mu: &Composition) -> Result<Vec<usize>> {
    refinement_groups(nu, mu).ok_or_else(|| Error::InvalidInput(format!("{nu} is not a refinement of {mu}")))
}

/// `m_μ ∘_μ m_S = Σ_{T|_μ = S} m_T` for `ν` refining `μ`, `S ∈ Tab_{λ;μ}`.
pub fn refinement_expansion_holds<R: Ring>(hs: &HomSpaces<R>, s: &Tableau, mu: &Composition, nu: &Composition) -> Result<bool> {
    let groups = groups_for(nu, mu)?;
    let lambda = s.shape();
    let unit = hs.m_in(mu, mu, nu)?;
    let lhs = hs.circ(&unit, &hs.m_s(s, mu)?)?;
    let basis = HomBasis::get(&lambda, nu)?;
    let r = hs.ring();
    let mut expected = vec![r.zero(); basis.len()];
    for t in lifts(s, mu.len(), nu, &groups) {
        let i = basis.position(&t).ok_or_else(|| Error::Invariant(format!("lift {t} not in Tab")))?;
        expected[i] = r.add(&expected[i], &r.one());
    }
    Ok(lhs.coeffs() == expected.as_slice())
}

/// The scalar `Π_i q^{ℓ_i} Π_{k,i} [#_{ki}(T|_μ); #_{k,a_i}(T), …]` with
/// `m_μ ∘_ν m_T = c · m_{T|_μ}`.
pub fn refinement_collapse_scalar(t: &Tableau, nu: &Composition, mu: &Composition) -> Result<Laurent> {
    let groups = groups_for(nu, mu)?;
    let counts = t.counts(nu.len());
    let mut c = Laurent::one();
    for row in &counts {
        for g in 0..mu.len() {
            let parts: Vec<u32> = (0..nu.len()).filter(|&j| groups[j] == g).map(|j| row[j] as u32).collect();
            c = c.mul(&q_multinomial_poly(&parts));
        }
    }
    let mut inversions = 0i32;
    for (k, upper) in t.rows().enumerate() {
        for lower in t.rows().skip(k + 1) {
            for &x in upper {
                for &y in lower {
                    let (x, y) = (x as usize - 1, y as usize - 1);
                    if groups[x] == groups[y] && y < x {
                        inversions += 1;
                    }
                }
            }
        }
    }
    Ok(c.shift_q(inversions))
}

/// `m_μ ∘_ν m_T` against [`refinement_collapse_scalar`].
pub fn refinement_collapse_holds<R: Ring>(hs: &HomSpaces<R>, t: &Tableau, nu: &Composition, mu: &Composition) -> Result<bool> {
    let groups = groups_for(nu, mu)?;
    let lambda = t.shape();
    let m = hs.m_in(mu, nu, mu)?;
    let lhs = hs.circ(&m, &hs.m_s(t, nu)?)?;
    let c = hs.ring().from_laurent(&refinement_collapse_scalar(t, nu, mu)?);
    let target = hs.m_s(&t.restrict(&groups), mu)?;
    debug_assert_eq!(target.lambda(), &lambda);
    Ok(lhs == hs.scale(&c, &target))
}

/// `w ν = (ν_{w(1)}, …, ν_{w(r)})`.
pub fn permute_composition(w: &Perm, nu: &Composition) -> Composition {
    Composition::new((1..=w.n()).map(|i| nu.part(w.apply(i) - 1)).collect())
}

/// The hypothesis of the permutation-tableau rule: whenever box `(k,l)` is
/// in the same row as or below `(i,j)` and `T(k,l) < T(i,j)`, `w` keeps
/// the order of those two entries.
pub fn permutation_hypothesis(t: &Tableau, w: &Perm) -> bool {
    let rows: Vec<&[u8]> = t.rows().collect();
    for (i, upper) in rows.iter().enumerate() {
        for lower in &rows[i..] {
            for &x in upper.iter() {
                for &y in lower.iter() {
                    if y < x && w.apply(y as usize) > w.apply(x as usize) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `m_{P_{w,ν}} ∘_{wν} m_T = m_{wT}` for `T ∈ Tab_{λ;wν}` satisfying
/// [`permutation_hypothesis`].
pub fn permutation_rule_holds<R: Ring>(hs: &HomSpaces<R>, t: &Tableau, nu: &Composition, w: &Perm) -> Result<bool> {
    if !permutation_hypothesis(t, w) {
        return Err(Error::InvalidInput(format!("{t} does not satisfy the hypothesis for {w}")));
    }
    let wnu = permute_composition(w, nu);
    let p = Tableau::permutation_tableau(w, nu);
    let lhs = hs.circ(&hs.m_s(&p, nu)?, &hs.m_s(t, &wnu)?)?;
    Ok(lhs == hs.m_s(&t.act(w), nu)?)
}

/// `m_μ ∘_ν m_{P_{w,ν}} ∘_{wν} m_λ` for the canonical `(ν, w)` of `S`.
pub fn canonical_recomposition<R: Ring>(hs: &HomSpaces<R>, s: &Tableau, mu: &Composition) -> Result<HomElem<R>> {
    let lambda = s.shape();
    let (nu, w) = canonical_decomposition(s, mu.len());
    let wnu = permute_composition(&w, &nu);
    let left = hs.m_in(mu, &nu, mu)?;
    let middle = hs.m_s(&Tableau::permutation_tableau(&w, &nu), &nu)?;
    let right = hs.m_in(&lambda, &lambda, &wnu)?;
    hs.circ(&hs.circ(&left, &middle)?, &right)
}

fn block_perm(parts: &[(usize, Option<Perm>)]) -> Perm {
    let mut images = Vec::new();
    let mut offset = 0;
    for (len, w) in parts {
        for i in 1..=*len {
            images.push(offset + w.as_ref().map_or(i, |w| w.apply(i)));
        }
        offset += len;
    }
    Perm::from_one_line(&images).expect("block permutation")
}

/// `ϖ_{(n,m)}`: `i ↦ i+m` on the first `n` letters, `i ↦ i−n` on the rest.
pub fn block_swap(n: usize, m: usize) -> Perm {
    Composition::new(vec![n, m]).longest_rep()
}

/// Both length-additive hexagon factorizations of the braiding, as
/// identities between products of `T`'s in `H_{n+m+p}`.
pub fn hexagons_hold<R: Ring>(n: usize, m: usize, p: usize, ring: R) -> Result<bool> {
    let total = n + m + p;
    let h = Hecke::new(ring, total);
    // ϖ_{(n+p,m)} = (ϖ_{(n,m)}, 1_p)·(1_n, ϖ_{(p,m)})
    let lhs1 = h.t(&block_swap(n + p, m))?;
    let a = block_perm(&[(n + m, Some(block_swap(n, m))), (p, None)]);
    let b = block_perm(&[(n, None), (p + m, Some(block_swap(p, m)))]);
    let rhs1 = h.mul(&h.t(&a)?, &h.t(&b)?)?;
    let additive1 = a.length() + b.length() == block_swap(n + p, m).length() && a.compose(&b) == block_swap(n + p, m);
    // ϖ_{(p,m+n)} = (1_m, ϖ_{(p,n)})·(ϖ_{(p,m)}, 1_n)
    let lhs2 = h.t(&block_swap(p, m + n))?;
    let c = block_perm(&[(m, None), (p + n, Some(block_swap(p, n)))]);
    let d = block_perm(&[(p + m, Some(block_swap(p, m))), (n, None)]);
    let rhs2 = h.mul(&h.t(&c)?, &h.t(&d)?)?;
    let additive2 = c.length() + d.length() == block_swap(p, m + n).length() && c.compose(&d) == block_swap(p, m + n);
    Ok(additive1 && additive2 && h.equal(&lhs1, &rhs1) && h.equal(&lhs2, &rhs2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::IntegerLaurent;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn worked_canonical_decomposition() {
        let s = Tableau::parse("22333/1111/133").unwrap();
        assert_eq!(s.weight(3), comp(&[5, 2, 5]));
        let (nu, w) = canonical_decomposition(&s, 3);
        assert_eq!(nu, comp(&[4, 1, 2, 3, 2]));
        assert_eq!(permute_composition(&w, &nu), comp(&[2, 3, 4, 1, 2]));
        // recomposition at n=12 is too large for the tables; a smaller case:
        let hs = HomSpaces::new(IntegerLaurent, 5);
        let s = Tableau::parse("122/13").unwrap();
        let mu = comp(&[2, 2, 1]);
        let x = canonical_recomposition(&hs, &s, &mu).unwrap();
        assert_eq!(x, hs.m_s(&s, &mu).unwrap());
    }

    #[test]
    fn collapse_scalar_small() {
        let hs = HomSpaces::new(IntegerLaurent, 3);
        let t = Tableau::parse("2/13").unwrap();
        assert!(refinement_collapse_holds(&hs, &t, &comp(&[1, 1, 1]), &comp(&[3])).unwrap());
        assert!(refinement_expansion_holds(&hs, &Tableau::parse("1/11").unwrap(), &comp(&[3]), &comp(&[1, 2])).unwrap());
    }

    #[test]
    fn hexagons() {
        for (n, m, p) in [(1, 1, 1), (2, 1, 1), (1, 2, 2), (0, 2, 1)] {
            assert!(hexagons_hold(n, m, p, IntegerLaurent).unwrap());
        }
    }
}
