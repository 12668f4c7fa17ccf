use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stabledp::reductions::{IntervalItem, ProblemInstance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    RandomLis,
    RandomIntervals,
    RandomStrings,
    RandomKnapsack,
    AdversarialLis,
    RandomRna,
}

/// Problem whose string instance `random-strings` produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StringProblem {
    Lcs,
    Lps,
}

const RNA_BASES: [char; 4] = ['A', 'C', 'G', 'U'];
const RNA_PAIRS: [(char, char); 6] = [('A', 'U'), ('U', 'A'), ('G', 'C'), ('C', 'G'), ('G', 'U'), ('U', 'G')];

fn word(rng: &mut ChaCha8Rng, len: usize, alphabet: &[char]) -> String {
    (0..len).map(|_| alphabet[rng.random_range(0..alphabet.len())]).collect()
}

/// Increasing run of `len` values starting at `start`, with gaps in `1..=3`.
fn increasing_run(rng: &mut ChaCha8Rng, start: i64, len: usize) -> Vec<i64> {
    let mut cur = start;
    (0..len)
        .map(|_| {
            cur += rng.random_range(1..=3);
            cur
        })
        .collect()
}

pub fn generate(family: Family, n: usize, seed: u64, strings: StringProblem) -> ProblemInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let range = (10 * n as i64).max(10);
    match family {
        Family::RandomLis => ProblemInstance::Lis { sequence: (0..n).map(|_| rng.random_range(0..range)).collect() },
        Family::RandomIntervals => ProblemInstance::Intervals {
            items: (0..n)
                .map(|_| {
                    let l = rng.random_range(0..(2 * n).max(1)) as f64;
                    let r = l + rng.random_range(1..=5) as f64;
                    IntervalItem { l, r, w: rng.random_range(1..=10) as f64 }
                })
                .collect(),
        },
        Family::RandomStrings => match strings {
            StringProblem::Lcs => {
                ProblemInstance::Lcs { strings: vec![word(&mut rng, n, &['a', 'b', 'c', 'd']), word(&mut rng, n, &['a', 'b', 'c', 'd'])] }
            }
            StringProblem::Lps => ProblemInstance::Lps { string: word(&mut rng, n, &['a', 'b', 'c']) },
        },
        Family::RandomKnapsack => {
            let costs: Vec<u64> = (0..n).map(|_| rng.random_range(1..=10)).collect();
            let weights = (0..n).map(|_| rng.random_range(1..=20) as f64).collect();
            let capacity = (costs.iter().sum::<u64>() / 2).max(1);
            ProblemInstance::Knapsack { costs, weights, capacity }
        }
        Family::AdversarialLis => {
            // A high block followed by an equally long (or one longer) low
            // block: the first-index DP flips between them under deletions.
            let high = n / 2;
            let low = increasing_run(&mut rng, 0, n - high);
            let top = low.last().copied().unwrap_or(0);
            let mut sequence = increasing_run(&mut rng, top + 1, high);
            sequence.extend(low);
            ProblemInstance::Lis { sequence }
        }
        Family::RandomRna => ProblemInstance::Rna { string: word(&mut rng, n, &RNA_BASES), relation: RNA_PAIRS.to_vec() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adversarial_blocks() {
        let ProblemInstance::Lis { sequence } = generate(Family::AdversarialLis, 7, 3, StringProblem::Lcs) else {
            panic!("expected a sequence");
        };
        assert_eq!(sequence.len(), 7);
        assert!(sequence[..3].windows(2).all(|w| w[0] < w[1]));
        assert!(sequence[3..].windows(2).all(|w| w[0] < w[1]));
        assert!(sequence[3..].iter().all(|&x| x < sequence[0]));
    }

    #[test]
    fn empty_rna() {
        assert_eq!(
            generate(Family::RandomRna, 0, 1, StringProblem::Lcs),
            ProblemInstance::Rna { string: String::new(), relation: RNA_PAIRS.to_vec() }
        );
    }
}
