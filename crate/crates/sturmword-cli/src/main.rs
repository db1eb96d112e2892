use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sturmword::{
    decompose_prefix, encode, is_conjugate, local_period_fast, shortest_repetition_word,
    BlockTable, DirectiveSequence, Error, OstrowskiDigits,
};

/// Characteristic Sturmian words, their digit system, and local periods.
///
/// Directive sequences are written `head[:cycle]` with comma-separated
/// positive integers: "1,3,2,2:2" repeats the 2 forever, ":1" is the
/// all-ones (Fibonacci) sequence, and "1,3" is finite (commands fail with
/// exit code 3 once its two terms are used up).
#[derive(Parser)]
#[command(name = "sturmword", version, max_term_width = 80)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first LENGTH letters of the word as a 0/1 string.
    Prefix {
        /// Directive sequence, e.g. "1,3,2,2:2" or ":1".
        #[arg(long)]
        alpha: DirectiveSequence,
        #[arg(long)]
        length: u64,
    },
    /// Write N in the digit system of the sequence.
    Encode {
        #[arg(long)]
        alpha: DirectiveSequence,
        n: u64,
        /// Emit a JSON object with the digit string and the sequence.
        #[arg(long)]
        json: bool,
    },
    /// Read a digit string back to the integer it represents.
    ///
    /// Digits are single characters ("1021") unless they exceed 9, in which
    /// case they are comma-separated ("1,12").
    Decode {
        #[arg(long)]
        alpha: DirectiveSequence,
        digits: String,
    },
    /// The local period at position N: the length of the shortest word that
    /// repeats across the boundary between positions N-1 and N.
    Period {
        #[arg(long)]
        alpha: DirectiveSequence,
        n: u64,
        /// Also run the brute-force search; output gains the witness word
        /// and an AGREE/DISAGREE marker (disagreement exits 1).
        #[arg(long)]
        oracle: bool,
        /// Print only the witness word found by the search.
        #[arg(long, conflicts_with = "oracle")]
        word: bool,
        /// Emit the result as a JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Local periods for every position in FROM..=TO, one TSV row per
    /// position: `n<TAB>period`.
    Table {
        #[arg(long)]
        alpha: DirectiveSequence,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Append the searched witness word and an AGREE/DISAGREE column.
        #[arg(long)]
        oracle: bool,
        /// One JSON object per row instead of TSV.
        #[arg(long)]
        json: bool,
    },
    /// The block product equal to the length-N prefix: rows of
    /// `block index<TAB>exponent`, most significant first.
    Decompose {
        #[arg(long)]
        alpha: DirectiveSequence,
        n: u64,
        /// Append the block itself as a third column.
        #[arg(long)]
        word: bool,
        /// Emit the index/exponent pairs as a JSON array.
        #[arg(long)]
        json: bool,
    },
    /// Check the digit rule against the brute-force search for every
    /// position up to MAX_N (agreement, conjugacy, and the period <= n+1
    /// bound). Exits 0 on success, 1 with the first counterexample
    /// otherwise.
    Verify {
        #[arg(long)]
        alpha: DirectiveSequence,
        #[arg(long)]
        max_n: u64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Exhausted { .. } => 3,
                Error::NoRepetitionWord { .. } | Error::NotRepetitionWord { .. } => 1,
                _ => 2,
            })
        }
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("values serialize without error")
}

fn run(command: Command) -> sturmword::Result<ExitCode> {
    match command {
        Command::Prefix { alpha, length } => {
            let mut table = BlockTable::new(alpha);
            println!("{}", table.word_prefix(length)?);
        }
        Command::Encode { alpha, n, json } => {
            let digits = encode(n, &alpha)?;
            if json {
                println!("{}", json_line(&digits));
            } else {
                println!("{digits}");
            }
        }
        Command::Decode { alpha, digits } => {
            println!("{}", OstrowskiDigits::parse(&digits, alpha)?.decode()?);
        }
        Command::Period {
            alpha,
            n,
            oracle,
            word,
            json,
        } => {
            let mut table = BlockTable::new(alpha);
            let mut result = local_period_fast(&mut table, n)?;
            let mut agree = true;
            if oracle || word {
                let witness = shortest_repetition_word(&mut table, n)?;
                let block = table.block(result.block_index)?;
                agree = witness.len() == result.period && is_conjugate(&witness, block);
                result.repetition_word = Some(witness);
            }
            if json {
                println!("{}", json_line(&result));
            } else if word {
                println!("{}", result.repetition_word.as_ref().unwrap());
            } else if oracle {
                println!(
                    "{}\t{}\t{}",
                    result.period,
                    result.repetition_word.as_ref().unwrap(),
                    if agree { "AGREE" } else { "DISAGREE" }
                );
            } else {
                println!("{}", result.period);
            }
            if !agree {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Table {
            alpha,
            from,
            to,
            oracle,
            json,
        } => {
            let mut table = BlockTable::new(alpha);
            let mut all_agree = true;
            for n in from..=to {
                let mut result = local_period_fast(&mut table, n)?;
                let mut agree = true;
                if oracle {
                    let witness = shortest_repetition_word(&mut table, n)?;
                    let block = table.block(result.block_index)?;
                    agree = witness.len() == result.period && is_conjugate(&witness, block);
                    result.repetition_word = Some(witness);
                    all_agree &= agree;
                }
                if json {
                    println!("{}", json_line(&result));
                } else if oracle {
                    println!(
                        "{}\t{}\t{}\t{}",
                        n,
                        result.period,
                        result.repetition_word.as_ref().unwrap(),
                        if agree { "AGREE" } else { "DISAGREE" }
                    );
                } else {
                    println!("{}\t{}", n, result.period);
                }
            }
            if !all_agree {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Decompose {
            alpha,
            n,
            word,
            json,
        } => {
            let mut table = BlockTable::new(alpha);
            let parts = decompose_prefix(n, &table)?;
            if json {
                println!("{}", json_line(&parts));
            } else {
                for (i, d) in parts {
                    if word {
                        println!("{}\t{}\t{}", i, d, table.block(i)?);
                    } else {
                        println!("{i}\t{d}");
                    }
                }
            }
        }
        Command::Verify { alpha, max_n } => {
            let mut table = BlockTable::new(alpha);
            for n in 0..=max_n {
                let fast = local_period_fast(&mut table, n)?;
                let witness = shortest_repetition_word(&mut table, n)?;
                let block = table.block(fast.block_index)?.clone();
                let agree = witness.len() == fast.period
                    && is_conjugate(&witness, &block)
                    && fast.period <= n + 1;
                if !agree {
                    println!(
                        "disagreement at n={}: rule gives period {} (block {}), search found {:?} of length {}",
                        n,
                        fast.period,
                        fast.block_index,
                        witness.to_string(),
                        witness.len()
                    );
                    return Ok(ExitCode::from(1));
                }
                if (n + 1) % 10_000 == 0 {
                    eprintln!("checked {} positions", n + 1);
                }
            }
            println!("all {} positions agree", max_n + 1);
        }
    }
    Ok(ExitCode::SUCCESS)
}
