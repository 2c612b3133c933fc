#!/usr/bin/env python3
"""Regenerate the shipped stemmer reference pairs.

Builds a morphologically varied vocabulary, stems it with both the
package implementation and the structurally independent reference
implementation from the test suite, refuses to write anything on
disagreement, and stores "word stem" lines in src/icrm/data/porter-pairs.txt.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tests"))

from icrm.porter import stem  # noqa: E402
from porter_reference import reference_stem  # noqa: E402

# Words exercising individual rules (classic suffix-stripping examples).
CANONICAL = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing
filing happy sky relational conditional rational valenci hesitanci
digitizer conformabli radicalli differentli vileli analogousli
vietnamization predication operator feudalism decisiveness hopefulness
callousness formaliti sensitiviti sensibiliti triplicate formative
formalize electriciti electrical hopeful goodness revival allowance
inference airliner gyroscopic adjustable defensible irritant replacement
adjustment dependent adoption homologou communism activate angulariti
homologous effective bowdlerize probate rate cease controll roll
oscillate generalization oscillation
""".split()

# Natural words with varied morphology, including y/vowel edge cases.
NATURAL = """
abilities ability absolutely abundance academic acceptance accessible
accidentally accompanied accomplishment accountability accumulation
accuracy achievement acknowledgement acquisition activation actively
adaptation additionally administration admiration advertisement advisory
agencies aggressive agitated agreement alignment alleged allocation
alternatively ambiguity amusement analyses analysis analytical ancient
animated anticipation anxiety apologies apparently appearance appliance
applicability application appreciation approximately argument arrangement
articulate assembled assessment assignment assistance association
assumption astonishing atmosphere attachment attendance attraction
authorities automatically availability basically batteries beautiful
beauties beginning believable beneficial biology bodies boundaries
brightness bubbles buried business busily calculation candidates
capabilities capacities carefully categories celebration ceremonies
challenges championship changing characterization cheerful chemistry
circumstances citizenship civilization classification cleanliness
collaboration collection colonies combination comfortable commentaries
commercial commitment communities comparative comparison compensation
competitive compilation complexity compliance complication composition
comprehension computation conceivable concentration conclusion
confidence configuration confirmation connection consciousness
consequences conservation considerable consistency consolidation
conspiracies constitution construction consultation consumption
contemplation continuation contribution controversies convenience
conversation cooperation coordination copies correlation correspondence
counties courageous creativity credibility cries critically criticism
crying curiosity currencies customarily darkness databases dealt
decently decoration dedication defiantly deficiencies definitely
deliberately deliveries democracies demonstration dependencies depression
description designation desirable destination destruction determination
devastating development dictionaries differences difficulties dignity
dimensions directories disabilities disappointment discoveries
discrimination discussion distinctive distribution diversity divisible
documentation domestically dominance donation dramatically duties
dynamically easily ecologically economies edition educational
effectiveness efficiencies elaborately electricity elimination
emergencies emotionally emphasized employment enabling encouragement
energies engagement enjoyable enjoyment enthusiasm entities entirely
environmental equality equipped equivalence especially essentially
establishment estimation evaluation eventually evidently evolutionary
examination exceedingly excellence exceptionally excitement exclusively
execution exhibition existence expansion expectation expedition
experiences experimentation explanation exploration explosion expression
extensively extraordinary facilities factories faithfully families
fascinating feasibility federation fellowship finalize financially
flexibility fluctuation forgiveness formation formulation foundation
fraternities frequencies friendliness functionality fundamentally
galleries generously gentleness genuinely geographically glories
governance gradually graduation gratefully gravity guarantees happily
happiness harmonies hastily hazardous headquarters heavily hesitation
hierarchies historically honestly hopelessly hostilities humanity
hypotheses identification identities ideologies illustration imagination
immediately immunities implementation implications importantly
impossibilities impression improvement inabilities incidentally
inclusion inconveniences incredibly independence indication indigenous
individuality industries inevitable infinitely inflation informally
ingredients inhabitants initialization initiatives innovation
inspiration installation instantly institution instruction integration
intelligence intensity intentionally interaction internally
interpretation intervention introduction invasion investigation
invisible invitation involvement ironically irregularities isolation
journalism journeys joyful judicially junction justification juvenile
kindness kingdoms knowingly laboratories landscapes lazily leadership
legacies legislation liabilities liberation libraries lifetimes
limitation listings literally liveliness locality logically loneliness
loyalties luckily luxuries machinery magnificently maintenance
majorities management manipulation manufacturing marginally marriages
massively mathematically maturity meaningful measurement mechanically
melodies memories mentally merciful metabolism methodologies migration
ministries miraculously miseries modification momentarily monasteries
motivation movement multiplication mysteries mysteriously nationalities
naturally navigation necessarily necessities negotiation nervously
neutrality nomination normally notably notification novelties obedience
objection obligation observation occasionally occupation occurrences
opportunities opposition optimization ordinarily organization
originality ornamental outrageous oxidation painfully parallelism
participation particularly partnership passionately patiently
peacefully penalties perceptions perfection performance permanently
permission persistence personalities personally persuasion
philosophies physically pleasantly policies politically popularity
population positively possession possibilities potentially
practically precisely predictable preferences preparation presentation
preservation pressures presumably previously primarily priorities
privileges probabilities procedures proclamation productivity
professionally programming progression prohibition promotion
pronunciation properties proportion proposition prosperity protection
psychology publication punishment purification qualification qualities
quantities radiation rationality readily realities realization
reasonably recognition recommendation reconstruction recovery
recreation reduction redundancies references reflection registration
regulation rejection relatively reliability religious remarkably
renovation repetition representation reputation requirement resemblance
reservation resistance resolution respectively responsibilities
restoration restriction retention revolutionary rigorously royalties
sadness safeguards salaries satisfaction scholarship scientifically
secondaries securities selectively sensibly separation seriousness
settlement significance similarities simplicity simulation sincerity
situation skies societies sociology solidarity solution sophistication
sparingly specialists specialties specification spectacularly
speculation spirituality spontaneously stabilization statistically
strategies strengthen studies subdivision submission subscription
substantially subtleties successfully suggestion summaries superiority
supervision supplementary surprisingly suspension sustainability
syllables symbolically sympathies synthesis systematically technologies
temporarily tendencies tension terminology territories testimonies
theoretically theories thirsty thoughtfully tightly tolerance
traditionally tragedies transformation transition translation
transmission transportation treaties tremendously tributaries
ultimately unanimously uncertainties undoubtedly unemployment
unexpectedly unification universally universities unnecessarily
urgently usefulness utilities utilization vacancies validation
valuables variation varieties vegetation verification victories
vigorously violation virtually visibility vitality vocabularies
voluntarily vulnerability warranties weaknesses wealthy wilderness
willingness wisely witnesses wonderfully worthiness
syzygy spy cry cried crying enjoy enjoyed enjoying day days monkey
monkeys toy toys boy boys say says stay stayed staying play played
playing employ employed employing betray betrayed try tries tried
trying fly flies flying dry dried drying deny denies denied denying
""".split()

BASES = """
accept adapt adjust admit adopt agree allow amaze amuse announce annoy
answer appear apply appoint approve argue arrange arrive attach attack
attend attract avoid bake balance bat beg behave believe belong blame
bless block boil borrow bounce brush bump burn bury buzz calculate
camp care carry cause challenge change charge chase cheat check cheer
chew choke chop claim clap clean clear climb close collect color
combine command comment communicate compare compete complain complete
concentrate concern confess confirm connect consider consist contain
continue copy correct cough count cover crash create cross cycle damage
dance dare decide decorate delay deliver depend describe deserve design
destroy develop disagree disappear discover discuss divide double doubt
drag dream dress drop drown dust earn educate embarrass employ empty
encourage end enter entertain escape examine excite excuse exercise
exist expand expect explain explode express extend face fade fasten
fear fetch file fill film fire fit fix flash float flood flow fold
follow force form found frame frighten gather gaze grab grate grease
greet grin guarantee guard guess guide hammer hand handle hang happen
harass harm hate haunt head heal heap heat help hook hop hope hug hunt
hurry identify ignore imagine impress improve include increase inform
inject injure instruct intend interest interfere interrupt invent
invite irritate itch jail jam jog join joke judge juggle jump kick kill
kiss kneel knit knock knot label land last laugh launch learn level
license lick lie lighten like list listen live load lock long look
love man manage march mark marry match mate matter measure meddle melt
memorize mend mess milk mine miss mix moan moor mourn move muddle mug
multiply murder name need nest nod note notice number obey object
observe obtain occur offend offer open order overflow owe own pack
paddle paint park part pass paste pat pause peck pedal peel peep
perform permit phone pick pinch pine place plan plant please plug
point poke polish pop possess post pour practice pray preach precede
prefer prepare present preserve press pretend prevent prick print
produce program promise protect provide pull pump punch puncture
punish push question queue race radiate rain raise reach realize
receive recognize record reduce reflect refuse regret reign reject
rejoice relax release rely remain remember remind remove repair repeat
replace reply report reproduce request rescue retire return rhyme rinse
risk rob rock rot rub ruin rule rush sack sail satisfy save saw scare
scatter scold scorch scrape scratch scream screw scrub seal search
separate serve settle shade share shave shelter shiver shock shop
shrug sigh sign signal sin sip ski skip slap slip slow smash smell
smile smoke snatch sneeze sniff snore snow soak sound spare spark
spell spill spoil spot spray sprout squash squeak squeal squeeze stain
stamp stare start state step stir stitch stop store strap strengthen
stretch strip stroke stuff subtract succeed suck suffer suggest suit
supply support suppose surprise surround suspect suspend switch talk
tame tap taste tease telephone tempt terrify test thank thaw tick
tickle tie time tip tire touch tour tow trace trade train transport
trap travel treat tremble trick trip trot trouble trust tug tumble
turn twist type undress unfasten unite unlock unpack untidy use vanish
visit wail wait walk wander want warm warn wash waste watch water wave
weigh welcome whine whip whirl whisper whistle wink wipe wish wobble
wonder work worry wrap wreck wrestle wriggle yawn yell zip zoom
""".split()

SUFFIXES = [
    "", "s", "es", "ed", "ing", "ings", "er", "ers", "ly", "ness",
    "ment", "ments", "ation", "ations", "ational", "ful", "fulness",
    "ous", "ously", "ousness", "ive", "ively", "iveness", "ize", "izer",
    "ization", "able", "abli", "ible", "al", "alli", "aliti", "iviti",
    "biliti", "ance", "ence", "enci", "anci", "ant", "ism", "icate",
    "ative", "alize", "iciti", "ical", "ion", "ator", "ies", "ied", "eed",
]


def build_vocabulary() -> list[str]:
    vocab = set(CANONICAL) | set(NATURAL)
    for base in BASES:
        vocab.add(base)
        for suffix in SUFFIXES[1:8]:  # common inflections for every base
            vocab.add(base + suffix)
    # Spread the rarer suffixes deterministically across the base list.
    for i, base in enumerate(BASES):
        for j in range(8, len(SUFFIXES)):
            if (i + j) % 7 == 0:
                vocab.add(base + SUFFIXES[j])
    return sorted(w for w in vocab if w.isalpha())


def main() -> int:
    vocabulary = build_vocabulary()
    disagreements = [
        (w, stem(w), reference_stem(w))
        for w in vocabulary
        if stem(w) != reference_stem(w)
    ]
    if disagreements:
        for w, a, b in disagreements[:20]:
            print(f"DISAGREE {w}: package={a} reference={b}")
        print(f"{len(disagreements)} disagreements; not writing pairs file")
        return 1
    out = ROOT / "src" / "icrm" / "data" / "porter-pairs.txt"
    with open(out, "w", encoding="utf-8") as fh:
        for w in vocabulary:
            fh.write(f"{w} {stem(w)}\n")
    print(f"wrote {len(vocabulary)} pairs to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
