//! Named whole-graph checks, selectable at runtime.

use serde_json::{json, Value};

use super::{Analysis, IdealCount};
use crate::error::Result;
use crate::ideals;

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub passed: bool,
    pub details: Value,
}

pub trait TheoremCheck: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn run(&self, a: &Analysis) -> Result<CheckOutcome>;
}

struct KEquivalenceCheck;

impl TheoremCheck for KEquivalenceCheck {
    fn name(&self) -> &'static str {
        "k-equivalence"
    }

    fn summary(&self) -> &'static str {
        "Condition (K) holds iff every sampled ideal is an intersection of primes"
    }

    fn run(&self, a: &Analysis) -> Result<CheckOutcome> {
        let r = a.condition_k_equivalence()?;
        let counter = a.prime_intersection_counterexample()?;
        let g = a.g();
        Ok(CheckOutcome {
            passed: r.agrees() && counter.is_some() != r.condition_k,
            details: json!({
                "conditionK": r.condition_k,
                "allIntersectionsOfPrimes": r.all_intersections_of_primes,
                "tested": r.tested,
                "counterexample": counter.map(|i| i.display(g).to_string()),
            }),
        })
    }
}

struct EverythingPrimeCheck;

impl TheoremCheck for EverythingPrimeCheck {
    fn name(&self) -> &'static str {
        "everything-prime"
    }

    fn summary(&self) -> &'static str {
        "all ideals prime iff (K), chain, |B_H| <= 1 and directed quotients iff (K) and chain"
    }

    fn run(&self, a: &Analysis) -> Result<CheckOutcome> {
        let r = a.everything_prime_check()?;
        Ok(CheckOutcome {
            passed: r.agrees(),
            details: json!({
                "allPrime": r.all_prime,
                "kChainDirected": r.k_chain_directed,
                "kChain": r.k_chain,
            }),
        })
    }
}

struct FinitelyManyIdealsCheck;

impl TheoremCheck for FinitelyManyIdealsCheck {
    fn name(&self) -> &'static str {
        "finitely-many-ideals"
    }

    fn summary(&self) -> &'static str {
        "the number of ideals is finite iff Condition (K) holds"
    }

    fn run(&self, a: &Analysis) -> Result<CheckOutcome> {
        let k = a.g().condition_k().holds();
        let count = a.count_ideals()?;
        let (finite, value) = match &count {
            IdealCount::Finite(n) => (true, json!(n)),
            IdealCount::Infinite(..) => (false, json!("infinite")),
        };
        Ok(CheckOutcome { passed: finite == k, details: json!({ "conditionK": k, "ideals": value }) })
    }
}

struct MaximalDecompositionCheck;

impl TheoremCheck for MaximalDecompositionCheck {
    fn name(&self) -> &'static str {
        "maximal-decomposition"
    }

    fn summary(&self) -> &'static str {
        "with (K) and a partition into minimal hereditary saturated sets, every ideal is a meet of maximals"
    }

    fn run(&self, a: &Analysis) -> Result<CheckOutcome> {
        Ok(match a.maximal_decomposition()? {
            None => CheckOutcome { passed: true, details: json!({ "blocks": Value::Null }) },
            Some(d) => CheckOutcome {
                passed: d.zero_is_meet_of_maximals && d.every_ideal_meet_of_maximals,
                details: json!({
                    "blocks": d.blocks.iter().map(|&b| a.g().set_names(b)).collect::<Vec<_>>(),
                    "zeroIsMeetOfMaximals": d.zero_is_meet_of_maximals,
                    "everyIdealMeetOfMaximals": d.every_ideal_meet_of_maximals,
                }),
            },
        })
    }
}

struct GradedFactorizationCheck;

impl TheoremCheck for GradedFactorizationCheck {
    fn name(&self) -> &'static str {
        "graded-factorization"
    }

    fn summary(&self) -> &'static str {
        "every proper graded ideal is an irredundant product and meet of graded primes"
    }

    fn run(&self, a: &Analysis) -> Result<CheckOutcome> {
        let g = a.g();
        let mut factored = 0;
        let mut failures = Vec::new();
        for (i, pair) in a.lattice.elements().iter().enumerate() {
            if i == a.lattice.top() {
                continue;
            }
            let ideal = ideals::IdealRep::graded(*pair);
            match a.factor_graded(&ideal) {
                Ok(_) => factored += 1,
                Err(e) if e.is_internal() => return Err(e),
                Err(e) => failures.push(format!("{}: {e}", pair.display(g))),
            }
        }
        Ok(CheckOutcome {
            passed: failures.is_empty(),
            details: json!({ "factored": factored, "failures": failures }),
        })
    }
}

struct PrimeExistsCheck;

impl TheoremCheck for PrimeExistsCheck {
    fn name(&self) -> &'static str {
        "prime-exists"
    }

    fn summary(&self) -> &'static str {
        "the algebra has a prime ideal"
    }

    fn run(&self, a: &Analysis) -> Result<CheckOutcome> {
        let p = a.prime_always_exists()?;
        Ok(CheckOutcome { passed: true, details: json!({ "prime": p.display(a.g()).to_string() }) })
    }
}

struct KrullCheck;

impl TheoremCheck for KrullCheck {
    fn name(&self) -> &'static str {
        "krull"
    }

    fn summary(&self) -> &'static str {
        "powers of non-graded ideals are distinct and meet in the graded part, which is zero iff no vertices"
    }

    fn run(&self, a: &Analysis) -> Result<CheckOutcome> {
        let g = a.g();
        let mut tested = 0;
        let mut failures = Vec::new();
        for i in a.sample_ideals()? {
            a.krull_check(&i)?;
            if i.is_graded() {
                continue;
            }
            tested += 1;
            let powers = (1..=5).map(|n| ideals::power(g, &i, n)).collect::<Result<Vec<_>>>()?;
            let distinct = (0..5).all(|m| (m + 1..5).all(|n| powers[m] != powers[n]));
            let limit = ideals::limit_power(g, &i);
            if !distinct || limit.graded_part() != i.graded_part() || !limit.is_graded() {
                failures.push(i.display(g).to_string());
            }
        }
        Ok(CheckOutcome {
            passed: failures.is_empty(),
            details: json!({ "tested": tested, "failures": failures }),
        })
    }
}

/// All registered checks in a fixed order.
pub fn registry() -> Vec<Box<dyn TheoremCheck>> {
    vec![
        Box::new(KEquivalenceCheck),
        Box::new(EverythingPrimeCheck),
        Box::new(FinitelyManyIdealsCheck),
        Box::new(MaximalDecompositionCheck),
        Box::new(GradedFactorizationCheck),
        Box::new(PrimeExistsCheck),
        Box::new(KrullCheck),
    ]
}

pub fn find_check(name: &str) -> Option<Box<dyn TheoremCheck>> {
    registry().into_iter().find(|c| c.name() == name)
}
