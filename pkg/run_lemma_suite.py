#!/usr/bin/env python3
"""
Roman Domination Engine
Lemma Suite Launcher
Runs every reproducibility check and prints the pass/fail table
"""

import asyncio
import logging
import sys
from pathlib import Path

# Add project root to path
sys.path.append(str(Path(__file__).parent))

from roman_domination_core import LemmaSuite, Scale, get_settings
from roman_domination_core.config import LOG_FORMAT
from roman_domination_core.lemmas import all_passed, results_table


async def run_lemma_suite(scale: Scale) -> int:
    settings = get_settings()
    print("🧪 Roman Domination Engine - Lemma Suite")
    print("=" * 60)
    print(f"   Scale: {scale.value} | Seed: {settings.seed} | Workers: {settings.jobs}")

    suite = LemmaSuite(scale, settings)
    results = await suite.run(jobs=settings.jobs)

    print(results_table(results).drop(columns=["error"]).to_string(index=False))
    for result in results:
        if result.error:
            print(f"❌ {result.name}: {result.error}")

    if all_passed(results):
        print(f"\n✅ All {len(results)} checks passed")
        return 0
    print(f"\n❌ {sum(not r.success for r in results)} of {len(results)} checks failed")
    return 4


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format=LOG_FORMAT, stream=sys.stderr)
    chosen = Scale(sys.argv[1]) if len(sys.argv) > 1 else Scale.DESK
    sys.exit(asyncio.run(run_lemma_suite(chosen)))
