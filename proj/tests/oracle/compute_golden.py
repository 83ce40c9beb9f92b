#!/usr/bin/env python3
"""Brute-force oracle for the end-to-end golden files.

Recomputes every report in tests/golden/ from the fixture corpus with plain
loops, independently of the C++ implementation. The CSV layouts written here
are the canonical report formats; the toolkit must reproduce them byte for
byte:

  ranking_<scheme>.csv          rank,researcher_id,committee,cumulative
  top_group_<scheme>.csv        same columns, first ceil(q*N) rows
  composition_<scheme>.csv      committee,count,percent
  committee_share_<scheme>.csv  committee,members_in_group,committee_size,percent
  delta_top_group.csv           committee,integer_count,fractional_count,delta
  coauthorship_distribution.csv committee plus one column per co-author bin
  committee_summary.csv         per-committee publication/citation aggregates

Shared arithmetic conventions (mirrored by the implementation): publications
sorted by pub_id, researchers by researcher_id, indicator values folded in
publication order, cumulative point = mean of the four scoring points in a
fixed kind order, percents formatted with %.2f and ranking points with %.6f.
"""

import csv
import json
import math
from pathlib import Path

HERE = Path(__file__).resolve().parent
FIXTURE_DIR = HERE.parent / "fixtures"
GOLDEN_DIR = HERE.parent / "golden"

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

BIN_LABELS = ["authors_1", "authors_2", "authors_3_5", "authors_6_10", "authors_11_20",
              "authors_21_50", "authors_51_100", "authors_101_500", "authors_501_plus"]

WINDOW = (2011, 2020)
QUANTILE = 0.25

# Proposed rule-set minima for the four scoring indicators, in scoring order.
SCORING = [("total_pubs", 40.0), ("indexed_articles", 15.0),
           ("independent_citations", 180.0), ("indexed_citations", 80.0)]


def load_researchers(path):
    rows = {}
    with open(path, newline="", encoding="utf-8") as fh:
        for rec in csv.DictReader(fh):
            rows[rec["researcher_id"]] = rec["committee"]
    return rows


def load_publications(path):
    merged = {}
    order = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            rec = json.loads(line)
            pid = rec["pub_id"]
            if pid not in merged:
                merged[pid] = rec
                order.append(pid)
            else:
                base = merged[pid]
                base["independent_citations"] = max(base["independent_citations"],
                                                    rec["independent_citations"])
                base["wos_citations"] = max(base["wos_citations"], rec["wos_citations"])
                base["wos_indexed"] = base["wos_indexed"] or rec["wos_indexed"]
                base["scopus_indexed"] = base["scopus_indexed"] or rec["scopus_indexed"]
                if base.get("impact_factor") is None:
                    base["impact_factor"] = rec.get("impact_factor")
    pubs = [merged[pid] for pid in order if WINDOW[0] <= merged[pid]["year"] <= WINDOW[1]]
    pubs.sort(key=lambda p: p["pub_id"])
    return pubs


def member_ids(pub):
    return [a[2:] for a in pub["authors"] if a.startswith("m:")]


def attributed_committee(pub, committees):
    for a in pub["authors"]:
        if a.startswith("m:"):
            return committees[a[2:]]
    raise ValueError(f"unattributable publication {pub['pub_id']}")


def credit(scheme, author_count):
    return 1.0 if scheme == "integer" else 1.0 / author_count


def indicator_value(kind, pubs, scheme):
    value = 0.0
    for pub in pubs:
        c = credit(scheme, pub["author_count"])
        if kind == "total_pubs":
            value += c
        elif kind == "indexed_articles":
            if pub["doc_type"] == "journal_article" and pub["wos_indexed"]:
                value += c
        elif kind == "independent_citations":
            value += pub["independent_citations"] * c
        elif kind == "indexed_citations":
            value += pub["wos_citations"] * c
        else:
            raise ValueError(kind)
    return value


def rank(researchers, pubs_by_member, scheme):
    entries = []
    for rid in sorted(researchers):
        pubs = pubs_by_member.get(rid, [])
        points_sum = 0.0
        total_pubs_value = 0.0
        for kind, minimum in SCORING:
            value = indicator_value(kind, pubs, scheme)
            if kind == "total_pubs":
                total_pubs_value = value
            points_sum += value / minimum
        cumulative = points_sum / len(SCORING)
        entries.append((rid, researchers[rid], cumulative, total_pubs_value))
    entries.sort(key=lambda e: (-e[2], -e[3], e[0]))
    return entries


def top_count(q, n):
    if n == 0:
        return 0
    return min(n, max(1, math.ceil(q * n - 1e-9)))


def write_ranking(path, entries):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("rank,researcher_id,committee,cumulative\n")
        for i, (rid, committee, cumulative, _) in enumerate(entries, start=1):
            fh.write(f"{i},{rid},{committee},{cumulative:.6f}\n")


def write_composition(path, group):
    counts = {c: 0 for c in COMMITTEES}
    for _, committee, _, _ in group:
        counts[committee] += 1
    size = len(group)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("committee,count,percent\n")
        for c in COMMITTEES:
            percent = 100.0 * counts[c] / size if size else 0.0
            fh.write(f"{c},{counts[c]},{percent:.2f}\n")
    return counts


def write_share(path, counts, committee_sizes):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("committee,members_in_group,committee_size,percent\n")
        for c in COMMITTEES:
            size = committee_sizes.get(c, 0)
            if size == 0:
                continue
            fh.write(f"{c},{counts[c]},{size},{100.0 * counts[c] / size:.2f}\n")


def coauthor_bin(n):
    if n == 1:
        return 0
    if n == 2:
        return 1
    if n <= 5:
        return 2
    if n <= 10:
        return 3
    if n <= 20:
        return 4
    if n <= 50:
        return 5
    if n <= 100:
        return 6
    if n <= 500:
        return 7
    return 8


def main():
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    researchers = load_researchers(FIXTURE_DIR / "researchers.csv")
    pubs = load_publications(FIXTURE_DIR / "publications.jsonl")

    committee_sizes = {c: 0 for c in COMMITTEES}
    for committee in researchers.values():
        committee_sizes[committee] += 1

    pubs_by_member = {}
    for pub in pubs:
        for rid in member_ids(pub):
            pubs_by_member.setdefault(rid, []).append(pub)

    # Rankings, top groups, compositions, shares and the scheme delta table.
    deltas = {}
    for scheme in ["integer", "fractional"]:
        entries = rank(researchers, pubs_by_member, scheme)
        write_ranking(GOLDEN_DIR / f"ranking_{scheme}.csv", entries)
        group = entries[: top_count(QUANTILE, len(entries))]
        write_ranking(GOLDEN_DIR / f"top_group_{scheme}.csv", group)
        counts = write_composition(GOLDEN_DIR / f"composition_{scheme}.csv", group)
        write_share(GOLDEN_DIR / f"committee_share_{scheme}.csv", counts, committee_sizes)
        deltas[scheme] = counts

    with open(GOLDEN_DIR / "delta_top_group.csv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("committee,integer_count,fractional_count,delta\n")
        for c in COMMITTEES:
            d = deltas["fractional"][c] - deltas["integer"][c]
            fh.write(f"{c},{deltas['integer'][c]},{deltas['fractional'][c]},{d}\n")

    # Co-authorship distribution (per committee and overall).
    bins = {c: [0] * 9 for c in COMMITTEES}
    totals = [0] * 9
    pub_committee = {}
    for pub in pubs:
        committee = attributed_committee(pub, researchers)
        pub_committee[pub["pub_id"]] = committee
        b = coauthor_bin(pub["author_count"])
        bins[committee][b] += 1
        totals[b] += 1
    with open(GOLDEN_DIR / "coauthorship_distribution.csv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("committee," + ",".join(BIN_LABELS) + "\n")
        for c in COMMITTEES:
            n = sum(bins[c])
            percents = [100.0 * k / n if n else 0.0 for k in bins[c]]
            fh.write(c + "," + ",".join(f"{p:.2f}" for p in percents) + "\n")
        n = sum(totals)
        fh.write("overall," + ",".join(f"{100.0 * k / n if n else 0.0:.2f}" for k in totals) + "\n")

    # Committee summary.
    with open(GOLDEN_DIR / "committee_summary.csv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("committee,publications,percent_wos_indexed,percent_uncited,"
                 "independent_citations,mean_citations_per_cited,"
                 "wos_citations,mean_wos_citations_per_cited\n")
        for c in COMMITTEES:
            cpubs = [p for p in pubs if pub_committee[p["pub_id"]] == c]
            n = len(cpubs)
            wos = sum(1 for p in cpubs if p["wos_indexed"])
            uncited = sum(1 for p in cpubs if p["independent_citations"] == 0)
            cited = n - uncited
            total_ind = sum(p["independent_citations"] for p in cpubs)
            total_wos = sum(p["wos_citations"] for p in cpubs)
            pct_wos = f"{100.0 * wos / n:.2f}" if n else "0.00"
            pct_uncited = f"{100.0 * uncited / n:.2f}" if n else "0.00"
            mean_ind = f"{total_ind / cited:.2f}" if cited else ""
            mean_wos = f"{total_wos / cited:.2f}" if cited else ""
            fh.write(f"{c},{n},{pct_wos},{pct_uncited},{total_ind},{mean_ind},{total_wos},{mean_wos}\n")

    # The directional finding the fixture must reproduce: the single-author
    # heavy committee gains top-group members under fractional counting.
    sg = deltas["fractional"]["social_geography"] - deltas["integer"]["social_geography"]
    gc = deltas["fractional"]["geochemistry"] - deltas["integer"]["geochemistry"]
    print(f"unique in-window publications: {len(pubs)}")
    print(f"top-group size: {top_count(QUANTILE, len(researchers))}")
    print("top-group counts (integer):   ", {c: deltas['integer'][c] for c in COMMITTEES})
    print("top-group counts (fractional):", {c: deltas['fractional'][c] for c in COMMITTEES})
    print(f"social_geography delta: {sg:+d}, geochemistry delta: {gc:+d}")
    if sg <= 0:
        raise SystemExit("fixture does not reproduce the directional finding; retune the generator")


if __name__ == "__main__":
    main()
