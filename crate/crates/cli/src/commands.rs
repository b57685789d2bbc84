//! One handler per subcommand. Each builds an [`Envelope`] from parsed inputs and
//! runs every invariant check that applies to the result.

use hnsplit::{
    binomial, direct_image_quotient_hn, euler_characteristic, euler_characteristic_on,
    hilbert_oracle, hilbert_polynomial_constant, polygon_from_pieces, polygon_from_splitting,
    pushforward_description, pushforward_splitting, quotient_presentation, resubstitute,
    splitting_product_oracle, splitting_type, sym_power_hn, AcyclicSpec, BigInt, Characteristic,
    CompleteIntersectionSpec, HNPolygon, HilbertTable, KernelQuotient, QuotientHn, RankDegree,
    Result, RuledSurfaceSpec, Stability, TwoHypersurfaceSpec,
};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::envelope::{big, bigs, polygon_value, Envelope};

fn strictly_decreasing(p: &HNPolygon) -> bool {
    p.pieces().windows(2).all(|w| w[0].cmp_slope(&w[1]).is_gt())
}

fn rank_degree_value(x: &RankDegree) -> Value {
    let mut m = Map::new();
    m.insert("rank".into(), big(&x.rank));
    m.insert("degree".into(), big(&x.degree));
    Value::Object(m)
}

fn zero_sheaf() -> Value {
    json!({ "zero_sheaf": true })
}

pub fn cmd_splitting(n: u32, degrees: &[u32]) -> Result<Envelope> {
    let inputs = json!({ "n": n, "degrees": degrees });
    let spec = CompleteIntersectionSpec::new(n, degrees.to_vec())?;
    let desc = pushforward_description(&spec)?;
    let st = &desc.splitting;

    let mut result = Map::new();
    result.insert("a".into(), bigs(st.multiplicities()));
    result.insert("bundle".into(), Value::String(desc.bundle.clone()));
    result.insert("rank".into(), big(&st.rank()));
    result.insert("degree".into(), big(&st.degree()));
    result.insert("polygon".into(), polygon_value(&desc.polygon));

    let mut env = Envelope::new("splitting", inputs, Value::Object(result));

    let j_max = spec.j_max();
    let table = HilbertTable::compute(&spec, j_max);
    let product = splitting_product_oracle(spec.degrees())?;
    let three_route = *st == product
        && (0..=j_max).all(|m| {
            let oracle = hilbert_oracle(&spec, m as i64);
            table.row(spec.codim())[m] == oracle && resubstitute(&spec, st, m) == oracle
        });
    env.check("three-route", three_route);
    env.check("rank", st.rank() == spec.degree_product());
    env.check(
        "normalization",
        st.get(0).is_one()
            && st.multiplicities().iter().all(|a| !a.is_negative())
            && st.top_twist() == spec.top_twist(),
    );
    let chi = euler_characteristic_on(st, spec.target_dim());
    let curve_ok = spec.target_dim() != 1 || euler_characteristic(st) == chi;
    env.check("chi", curve_ok && chi == hilbert_polynomial_constant(&spec));
    env.check("palindrome", st.is_palindromic());

    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let sorted_spec = CompleteIntersectionSpec::new(n, sorted)?;
    env.check("order-invariant", splitting_type(&sorted_spec)? == *st);
    Ok(env)
}

pub fn cmd_hn_sym(m: u32, s: i64, t: i64) -> Result<Envelope> {
    let inputs = json!({ "m": m, "s": s, "t": t });
    let polygon = sym_power_hn(m, s, t)?;
    let mut result = Map::new();
    result.insert("polygon".into(), polygon_value(&polygon));
    let mut env = Envelope::new("hn-sym", inputs, Value::Object(result));
    env.check("strictly-decreasing", strictly_decreasing(&polygon) && polygon.len() == m as usize + 1);
    env.check("rank-one-pieces", polygon.pieces().iter().all(|p| p.rank().is_one()));
    env.check(
        "degree-sum",
        polygon.degree() == binomial(i64::from(m) + 1, 2) * (s + t),
    );
    env.check("validator", polygon_from_pieces(polygon.pieces().to_vec()).as_ref() == Ok(&polygon));
    Ok(env)
}

pub fn cmd_ruled(
    n: u32,
    stability: Stability,
    alpha: i64,
    characteristic: Characteristic,
) -> Result<Envelope> {
    let mut inputs = Map::new();
    inputs.insert("n".into(), json!(n));
    match stability {
        Stability::Unstable { s, t } => {
            inputs.insert("stability".into(), json!("unstable"));
            inputs.insert("s".into(), json!(s));
            inputs.insert("t".into(), json!(t));
        }
        Stability::Semistable { e } => {
            inputs.insert("stability".into(), json!("semistable"));
            inputs.insert("e".into(), json!(e));
        }
    }
    inputs.insert("alpha".into(), json!(alpha));
    let char_name = match characteristic {
        Characteristic::Zero => "zero",
        Characteristic::Positive => "positive",
    };
    inputs.insert("characteristic".into(), json!(char_name));

    let spec = RuledSurfaceSpec::new(n, alpha, stability, characteristic)?;
    let polygon = match direct_image_quotient_hn(&spec)? {
        QuotientHn::Zero => return Ok(Envelope::new("ruled", Value::Object(inputs), zero_sheaf())),
        QuotientHn::Polygon(p) => p,
    };

    let mut result = Map::new();
    result.insert("zero_sheaf".into(), json!(false));
    result.insert("rank".into(), big(&polygon.rank()));
    result.insert("degree".into(), big(&polygon.degree()));
    result.insert("polygon".into(), polygon_value(&polygon));
    let mut env = Envelope::new("ruled", Value::Object(inputs), Value::Object(result));

    let k = i64::from(n) - 1;
    let deg_e = spec.bundle_degree();
    env.check("rank", polygon.rank() == BigInt::from(k));
    env.check(
        "degree-sum",
        polygon.degree() == -binomial(k, 2) * deg_e - BigInt::from(k) * (alpha + deg_e),
    );
    match stability {
        Stability::Unstable { s, t } => {
            env.check(
                "consecutive-differences",
                polygon.len() == k as usize
                    && polygon
                        .pieces()
                        .windows(2)
                        .all(|w| w[0].degree() - w[1].degree() == BigInt::from(s - t)),
            );
            if n >= 3 {
                let sym = sym_power_hn(n - 2, s, t)?;
                let dual: Vec<BigInt> = sym
                    .pieces()
                    .iter()
                    .rev()
                    .map(|p| -p.degree() - (alpha + s + t))
                    .collect();
                let ours: Vec<BigInt> = polygon.pieces().iter().map(|p| p.degree().clone()).collect();
                env.check("dual-sym-power", dual == ours);
            }
        }
        Stability::Semistable { .. } => env.check("semistable-block", polygon.is_semistable()),
    }
    Ok(env)
}

pub fn cmd_two_hyp(n1: u32, n2: u32, a1: i64, a2: i64, e: i64) -> Result<Envelope> {
    let inputs = json!({ "n1": n1, "n2": n2, "a1": a1, "a2": a2, "e": e });
    let spec = TwoHypersurfaceSpec::new(n1, n2, a1, a2, e)?;
    let p = match quotient_presentation(&spec)? {
        KernelQuotient::Zero => return Ok(Envelope::new("two-hyp", inputs, zero_sheaf())),
        KernelQuotient::Presentation(p) => p,
    };
    let mut result = Map::new();
    result.insert("zero_sheaf".into(), json!(false));
    result.insert("source".into(), rank_degree_value(&p.source));
    result.insert(
        "targets".into(),
        Value::Array(p.targets.iter().map(rank_degree_value).collect()),
    );
    result.insert("kernel".into(), rank_degree_value(&p.kernel));
    let mut env = Envelope::new("two-hyp", inputs, Value::Object(result));

    env.check("rank-identity", p.kernel.rank == BigInt::from(u64::from(n1) * u64::from(n2) - 1));
    env.check(
        "additivity",
        p.kernel.rank.clone() + &p.targets[0].rank + &p.targets[1].rank == p.source.rank
            && p.kernel.degree.clone() + &p.targets[0].degree + &p.targets[1].degree == p.source.degree,
    );
    let swapped = quotient_presentation(&spec.swapped())?;
    env.check(
        "swap-symmetry",
        swapped.presentation().map(|q| &q.kernel) == Some(&p.kernel),
    );
    Ok(env)
}

pub fn cmd_acyclic(cover_degree: u64, rank: u64, degree: i64, genus: u64) -> Result<Envelope> {
    let inputs = json!({ "cover_degree": cover_degree, "rank": rank, "degree": degree, "genus": genus });
    let spec = AcyclicSpec::new(cover_degree, rank, degree, genus)?;
    let st = pushforward_splitting(&spec)?;
    let polygon = polygon_from_splitting(&st);

    let mut result = Map::new();
    result.insert("a".into(), bigs(st.multiplicities()));
    result.insert("bundle".into(), Value::String(st.bundle_string()));
    result.insert("polygon".into(), polygon_value(&polygon));
    let mut env = Envelope::new("acyclic", inputs, Value::Object(result));

    let expected = BigInt::from(cover_degree) * BigInt::from(rank);
    env.check("rank", st.rank() == expected);
    env.check("chi", euler_characteristic(&st).is_zero());
    env.check(
        "semistable-slope",
        polygon.is_semistable() && polygon.pieces()[0].slope() == (BigInt::from(-1), BigInt::one()),
    );
    Ok(env)
}
