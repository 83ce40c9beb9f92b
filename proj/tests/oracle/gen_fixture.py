#!/usr/bin/env python3
"""Deterministic synthetic corpus generator for the end-to-end golden tests.

Produces tests/fixtures/researchers.csv and tests/fixtures/publications.jsonl:
~200 researchers and ~2000 in-window publications across the nine committees,
with committee-specific co-authorship, WoS-indexing, citation and language
profiles. Also plants windowing edge cases, duplicate publication lines and
researchers without publications so the loader's dedup/window paths are
exercised end to end.

Run from anywhere: paths are resolved relative to this file. Regenerating is
only needed when the corpus design changes; the outputs are committed.
"""

import json
import math
import random
from pathlib import Path

SEED = 20110101

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

# Canonical committee order used across the whole toolkit.
COMMITTEES = [
    "geochemistry",
    "geodesy",
    "geology",
    "geophysics",
    "meteorology",
    "mining",
    "palaeontology",
    "physical_geography",
    "social_geography",
]

# Co-authorship bins: 1, 2, 3-5, 6-10, 11-20, 21-50, 51-100, 101-500, >=501
BIN_RANGES = [(1, 1), (2, 2), (3, 5), (6, 10), (11, 20), (21, 50), (51, 100), (101, 500), (501, 900)]

# Per-committee generation profile:
#   researchers, publications, co-authorship bin weights (percent),
#   wos rate, uncited rate, mean independent citations per cited item,
#   mean wos citations per cited item, foreign-language rate, first-author rate
PROFILE = {
    "geochemistry": (28, 250, [5.90, 7.37, 40.22, 35.24, 9.13, 1.02, 1.02, 0.10, 0.00], 0.4165, 0.5199, 9.75, 10.34, 0.85, 0.50),
    "geodesy": (13, 86, [22.00, 19.50, 35.86, 16.27, 5.73, 0.37, 0.09, 0.18, 0.00], 0.1543, 0.7431, 5.80, 4.29, 0.55, 0.60),
    "geology": (15, 175, [6.20, 13.58, 44.76, 26.80, 6.70, 1.96, 0.00, 0.00, 0.00], 0.2648, 0.6664, 9.16, 9.17, 0.70, 0.50),
    "geophysics": (19, 147, [7.03, 13.78, 39.71, 25.11, 10.78, 3.10, 0.05, 0.33, 0.11], 0.3007, 0.6601, 6.91, 7.77, 0.75, 0.50),
    "meteorology": (20, 206, [9.29, 13.30, 52.95, 17.85, 4.51, 1.63, 0.43, 0.04, 0.00], 0.2644, 0.6536, 10.98, 10.71, 0.70, 0.50),
    "mining": (12, 110, [13.29, 25.27, 43.28, 16.12, 1.67, 0.29, 0.00, 0.07, 0.00], 0.0777, 0.7756, 6.21, 2.90, 0.45, 0.60),
    "palaeontology": (11, 86, [15.71, 16.64, 41.36, 19.05, 6.23, 0.84, 0.19, 0.00, 0.00], 0.4126, 0.5056, 9.54, 11.45, 0.80, 0.55),
    "physical_geography": (32, 389, [15.97, 15.81, 40.42, 24.71, 1.95, 1.05, 0.04, 0.04, 0.00], 0.1626, 0.6414, 6.89, 4.45, 0.55, 0.60),
    "social_geography": (50, 551, [35.65, 27.25, 29.04, 7.13, 0.70, 0.17, 0.06, 0.00, 0.00], 0.0685, 0.5969, 5.46, 1.03, 0.25, 0.80),
}

SURNAMES = ["Nagy", "Kovacs", "Toth", "Szabo", "Horvath", "Varga", "Kiss",
            "Molnar", "Nemeth", "Farkas", "Balogh", "Papp", "Juhasz", "Szilagyi"]

DOC_TYPES = ["journal_article", "book", "book_chapter", "conference", "other"]
DOC_WEIGHTS = [0.62, 0.03, 0.12, 0.15, 0.08]


def sample_author_count(rng, weights):
    lo, hi = rng.choices(BIN_RANGES, weights=weights, k=1)[0]
    return rng.randint(lo, hi)


def shifted_geometric(rng, mean):
    # Support {1, 2, ...} with the given mean.
    p = 1.0 / mean
    u = rng.random()
    return 1 + int(math.log(max(u, 1e-12)) / math.log(1.0 - p))


def geometric_from_zero(rng, mean):
    # Support {0, 1, ...} with the given mean.
    p = 1.0 / (1.0 + mean)
    u = rng.random()
    return int(math.log(max(u, 1e-12)) / math.log(1.0 - p))


def main():
    rng = random.Random(SEED)
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)

    researchers = []       # (id, name, committee, degree_year or None)
    by_committee = {c: [] for c in COMMITTEES}
    rid = 0
    for committee in COMMITTEES:
        n_res = PROFILE[committee][0]
        for _ in range(n_res):
            rid += 1
            r = f"r{rid:03d}"
            name = f"{rng.choice(SURNAMES)} {chr(ord('A') + rng.randrange(26))}."
            degree_year = rng.randint(1985, 2016) if rng.random() < 0.85 else None
            researchers.append((r, name, committee, degree_year))
            by_committee[committee].append(r)

    # Two profiles without any publication records.
    silent = {by_committee["mining"][-1], by_committee["social_geography"][-1]}

    pubs = []
    pid = 0
    for committee in COMMITTEES:
        (_, n_pubs, weights, wos_rate, uncited_rate,
         cit_mean, wos_cit_mean, foreign_rate, first_author_rate) = PROFILE[committee]
        members = [r for r in by_committee[committee] if r not in silent]
        # Uneven productivity across a committee's members.
        prolific = {m: rng.lognormvariate(0.0, 0.8) for m in members}
        total_w = sum(prolific.values())
        for _ in range(n_pubs):
            pid += 1
            pub_id = f"p{pid:04d}"
            n = sample_author_count(rng, weights)
            primary = rng.choices(members, weights=[prolific[m] / total_w for m in members], k=1)[0]

            extra_members = []
            if n > 1:
                max_extra = min(n - 1, 3)
                k_extra = min(max_extra, geometric_from_zero(rng, 0.6))
                pool = [m for m in members if m != primary]
                if k_extra and rng.random() < 0.05:
                    other = rng.choice([c for c in COMMITTEES if c != committee])
                    pool = pool + by_committee[other]
                extra_members = rng.sample(pool, k=min(k_extra, len(pool)))

            member_count = 1 + len(extra_members)
            if n <= 15:
                # Full byline: members at random positions, primary earliest.
                positions = sorted(rng.sample(range(1, n + 1), k=member_count))
                if rng.random() < first_author_rate:
                    positions[0] = 1
                authors = [f"x:{rng.choice(SURNAMES)} {chr(ord('A') + rng.randrange(26))}." for _ in range(n)]
                authors[positions[0] - 1] = f"m:{primary}"
                for slot, m in zip(positions[1:], extra_members):
                    authors[slot - 1] = f"m:{m}"
            else:
                # Hyperauthor record: only a listed prefix of the byline.
                authors = [f"m:{primary}"] + [f"m:{m}" for m in extra_members]
                authors += [f"x:{rng.choice(SURNAMES)} {chr(ord('A') + rng.randrange(26))}." for _ in range(3)]

            doc_type = rng.choices(DOC_TYPES, weights=DOC_WEIGHTS, k=1)[0]
            wos_indexed = doc_type == "journal_article" and rng.random() < wos_rate / 0.62
            cited = rng.random() >= uncited_rate
            independent = shifted_geometric(rng, cit_mean) if cited else 0
            wos_citations = geometric_from_zero(rng, wos_cit_mean) if cited else 0
            impact_factor = None
            if wos_indexed and rng.random() < 0.9:
                impact_factor = round(min(max(rng.lognormvariate(0.7, 0.6), 0.1), 15.0), 3)

            pubs.append({
                "pub_id": pub_id,
                "year": rng.randint(2011, 2020),
                "authors": authors,
                "author_count": n,
                "doc_type": doc_type,
                "language": "foreign" if rng.random() < foreign_rate else "hungarian",
                "wos_indexed": wos_indexed,
                "scopus_indexed": wos_indexed and rng.random() < 0.8,
                "impact_factor": impact_factor,
                "independent_citations": independent,
                "wos_citations": wos_citations,
            })

    # One deliberate hyperauthorship record for the top co-authorship bin.
    geophys_members = by_committee["geophysics"]
    pid += 1
    pubs.append({
        "pub_id": f"p{pid:04d}",
        "year": 2016,
        "authors": [f"m:{geophys_members[0]}", f"m:{geophys_members[1]}", "x:Collaboration et al."],
        "author_count": 612,
        "doc_type": "journal_article",
        "language": "foreign",
        "wos_indexed": True,
        "scopus_indexed": True,
        "impact_factor": 4.572,
        "independent_citations": 240,
        "wos_citations": 310,
    })

    # Out-of-window records (excluded by the 2011:2020 window).
    for year in [2005, 2008, 2009, 2010, 2021, 2022, 2009, 2024, 2007, 2010, 2021, 2006, 2023, 2010, 2021]:
        pid += 1
        committee = rng.choice(COMMITTEES)
        member = rng.choice(by_committee[committee])
        pubs.append({
            "pub_id": f"p{pid:04d}",
            "year": year,
            "authors": [f"m:{member}"],
            "author_count": 1,
            "doc_type": "journal_article",
            "language": "hungarian",
            "wos_indexed": False,
            "scopus_indexed": False,
            "impact_factor": None,
            "independent_citations": rng.randint(0, 12),
            "wos_citations": 0,
        })

    # Duplicate lines for ~25 publications with drifted citation data: the
    # loader must keep per-counter maxima and the union of the index flags.
    dup_lines = []
    for p in rng.sample(pubs[: len(pubs) - 16], k=25):
        dup = dict(p)
        dup["independent_citations"] = int(p["independent_citations"] * 0.8)
        if rng.random() < 0.5:
            dup["wos_citations"] = p["wos_citations"] + rng.randint(1, 5)
        if rng.random() < 0.3:
            dup["wos_indexed"] = False
        if rng.random() < 0.3:
            dup["scopus_indexed"] = True
        dup_lines.append(dup)

    with open(FIXTURE_DIR / "researchers.csv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("researcher_id,name,committee,degree_year\n")
        for r, name, committee, degree_year in researchers:
            fh.write(f"{r},{name},{committee},{degree_year if degree_year is not None else ''}\n")

    lines = [json.dumps(p, separators=(", ", ": ")) for p in pubs + dup_lines]
    with open(FIXTURE_DIR / "publications.jsonl", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")

    in_window = [p for p in pubs if 2011 <= p["year"] <= 2020]
    print(f"researchers: {len(researchers)}")
    print(f"publication lines: {len(pubs) + len(dup_lines)} "
          f"(unique {len(pubs)}, in-window {len(in_window)}, duplicates {len(dup_lines)})")


if __name__ == "__main__":
    main()
