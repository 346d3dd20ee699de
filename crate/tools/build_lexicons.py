#!/usr/bin/env python3
"""Builds the bundled lexicon data files under crates/gtminer/data/.

The lemmatizer in crates/gtminer/src/nlp/lemma.rs applies mechanical suffix
rules; this script re-implements those rules, generates every inflected form
it ships in open_class.tsv, and emits a lemma_exceptions.tsv entry whenever
the mechanical rules would not recover the base form. It also writes an
inflections fixture so the Rust test suite can verify the whole lexicon
round-trips through the lemmatizer.

Run from the repository root:  python3 tools/build_lexicons.py
"""

import os
from collections import OrderedDict

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "gtminer", "data")
FIXTURES = os.path.join(
    os.path.dirname(__file__), "..", "crates", "gtminer", "tests", "fixtures"
)

VOWELS = set("aeiou")

# ---------------------------------------------------------------------------
# Mirror of the Rust mechanical lemmatizer rules (see nlp/lemma.rs).
# ---------------------------------------------------------------------------


def is_consonant(c):
    return c.isalpha() and c not in VOWELS


def rules_noun(w):
    if len(w) <= 3:
        return w
    if w.endswith("ies"):
        stem = w[:-3]
        return stem + "y" if len(stem) >= 2 else w[:-1]
    if w.endswith("es"):
        stem = w[:-2]
        if stem.endswith(("s", "x", "z", "ch", "sh")):
            return stem
        return w[:-1]
    if w.endswith("s") and not w.endswith(("ss", "us", "is")):
        return w[:-1]
    return w


def undouble(stem):
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and is_consonant(stem[-1])
        and stem[-1] not in "lszf"
    ):
        return stem[:-1]
    return stem


def rules_verb(w):
    if len(w) <= 3:
        return w
    if w.endswith("ies"):
        stem = w[:-3]
        return stem + "y" if len(stem) >= 2 else w[:-1]
    if w.endswith("es"):
        stem = w[:-2]
        if stem.endswith(("s", "x", "z", "ch", "sh")):
            return stem
        return w[:-1]
    if w.endswith("s") and not w.endswith(("ss", "us", "is")):
        return w[:-1]
    if w.endswith("ing") and len(w) > 4:
        return undouble(w[:-3])
    if w.endswith("ied"):
        stem = w[:-3]
        return stem + "y" if len(stem) >= 2 else w[:-1]
    if w.endswith("ed") and len(w) > 3:
        return undouble(w[:-2])
    return w


def rules(w, pos):
    if pos == "NOUN":
        return rules_noun(w)
    if pos == "VERB":
        return rules_verb(w)
    return w


# ---------------------------------------------------------------------------
# Inflection generators (these define the shipped data, not the runtime).
# ---------------------------------------------------------------------------

IRREGULAR_PLURALS = {
    "child": "children", "man": "men", "woman": "women", "person": "people",
    "foot": "feet", "tooth": "teeth", "mouse": "mice", "goose": "geese",
    "life": "lives", "wife": "wives", "knife": "knives", "leaf": "leaves",
    "loaf": "loaves", "half": "halves", "shelf": "shelves", "wolf": "wolves",
    "thief": "thieves", "self": "selves", "analysis": "analyses",
    "crisis": "crises", "thesis": "theses", "diagnosis": "diagnoses",
    "hypothesis": "hypotheses", "basis": "bases", "criterion": "criteria",
    "phenomenon": "phenomena", "medium": "media", "datum": "data",
    "matrix": "matrices", "appendix": "appendices", "index": "indices",
}

SAME_PLURAL = {"series", "species", "sheep", "deer", "fish", "means", "news"}

NO_PLURAL = {
    "advice", "information", "knowledge", "money", "music", "weather", "fun",
    "homework", "luggage", "furniture", "equipment", "software", "traffic",
    "evidence", "research", "progress", "feedback", "health", "wealth",
    "happiness", "sadness", "anger", "courage", "patience", "pride", "honesty",
    "poverty", "hunger", "thirst", "laughter", "electricity", "oxygen",
    "blood", "sweat", "rice", "bread", "butter", "cheese", "meat", "milk",
    "coffee", "tea", "water", "air", "rain", "snow", "sunshine", "thunder",
    "dust", "sand", "mud", "grass", "gold", "silver", "iron", "steel", "wood",
    "paper", "plastic", "glass", "cotton", "wool", "silk", "leather",
    "clothing", "stuff", "garbage", "trash", "luck", "fame", "chaos",
    "violence", "peace", "silence", "noise", "darkness", "warmth", "behavior",
    "confusion", "enthusiasm", "stress", "anxiety", "depression", "obesity",
    "diabetes", "insulin", "staff", "vocabulary", "grammar", "mathematics",
    "physics", "economics", "politics", "ethics", "news",
}

OES_NOUNS = {"potato", "tomato", "hero", "echo", "veto", "tornado", "volcano", "mosquito"}


def pluralize(noun):
    if noun in SAME_PLURAL or noun in NO_PLURAL:
        return None if noun in NO_PLURAL else noun
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun.endswith("y") and len(noun) > 1 and is_consonant(noun[-2]):
        return noun[:-1] + "ies"
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun in OES_NOUNS:
        return noun + "es"
    return noun + "s"


# base -> (past, participle); identical past/participle may be elided by rule.
IRREGULAR_VERBS = {
    "arise": ("arose", "arisen"), "awake": ("awoke", "awoken"),
    "bear": ("bore", "borne"), "beat": ("beat", "beaten"),
    "become": ("became", "become"), "begin": ("began", "begun"),
    "bend": ("bent", "bent"), "bet": ("bet", "bet"), "bind": ("bound", "bound"),
    "bite": ("bit", "bitten"), "bleed": ("bled", "bled"),
    "blow": ("blew", "blown"), "break": ("broke", "broken"),
    "breed": ("bred", "bred"), "bring": ("brought", "brought"),
    "build": ("built", "built"), "burst": ("burst", "burst"),
    "buy": ("bought", "bought"), "catch": ("caught", "caught"),
    "choose": ("chose", "chosen"), "cling": ("clung", "clung"),
    "come": ("came", "come"), "cost": ("cost", "cost"),
    "creep": ("crept", "crept"), "cut": ("cut", "cut"),
    "deal": ("dealt", "dealt"), "dig": ("dug", "dug"),
    "draw": ("drew", "drawn"), "drink": ("drank", "drunk"),
    "drive": ("drove", "driven"), "eat": ("ate", "eaten"),
    "fall": ("fell", "fallen"), "feed": ("fed", "fed"),
    "feel": ("felt", "felt"), "fight": ("fought", "fought"),
    "find": ("found", "found"), "flee": ("fled", "fled"),
    "fling": ("flung", "flung"), "fly": ("flew", "flown"),
    "forbid": ("forbade", "forbidden"), "forget": ("forgot", "forgotten"),
    "forgive": ("forgave", "forgiven"), "freeze": ("froze", "frozen"),
    "get": ("got", "gotten"), "give": ("gave", "given"),
    "go": ("went", "gone"), "grind": ("ground", "ground"),
    "grow": ("grew", "grown"), "hang": ("hung", "hung"),
    "hear": ("heard", "heard"), "hide": ("hid", "hidden"),
    "hit": ("hit", "hit"), "hold": ("held", "held"),
    "hurt": ("hurt", "hurt"), "keep": ("kept", "kept"),
    "kneel": ("knelt", "knelt"), "know": ("knew", "known"),
    "lead": ("led", "led"), "leave": ("left", "left"),
    "lend": ("lent", "lent"), "let": ("let", "let"),
    "lie": ("lay", "lain"), "light": ("lit", "lit"),
    "lose": ("lost", "lost"), "make": ("made", "made"),
    "mean": ("meant", "meant"), "meet": ("met", "met"),
    "pay": ("paid", "paid"), "prove": ("proved", "proven"),
    "put": ("put", "put"), "quit": ("quit", "quit"),
    "read": ("read", "read"), "ride": ("rode", "ridden"),
    "ring": ("rang", "rung"), "rise": ("rose", "risen"),
    "run": ("ran", "run"), "say": ("said", "said"),
    "see": ("saw", "seen"), "seek": ("sought", "sought"),
    "sell": ("sold", "sold"), "send": ("sent", "sent"),
    "set": ("set", "set"), "shake": ("shook", "shaken"),
    "shed": ("shed", "shed"), "shine": ("shone", "shone"),
    "shoot": ("shot", "shot"), "show": ("showed", "shown"),
    "shrink": ("shrank", "shrunk"), "shut": ("shut", "shut"),
    "sing": ("sang", "sung"), "sink": ("sank", "sunk"),
    "sit": ("sat", "sat"), "sleep": ("slept", "slept"),
    "slide": ("slid", "slid"), "speak": ("spoke", "spoken"),
    "speed": ("sped", "sped"), "spend": ("spent", "spent"),
    "spin": ("spun", "spun"), "spread": ("spread", "spread"),
    "spring": ("sprang", "sprung"), "stand": ("stood", "stood"),
    "steal": ("stole", "stolen"), "stick": ("stuck", "stuck"),
    "sting": ("stung", "stung"), "strike": ("struck", "struck"),
    "swear": ("swore", "sworn"), "sweep": ("swept", "swept"),
    "swim": ("swam", "swum"), "swing": ("swung", "swung"),
    "take": ("took", "taken"), "teach": ("taught", "taught"),
    "tear": ("tore", "torn"), "tell": ("told", "told"),
    "think": ("thought", "thought"), "throw": ("threw", "thrown"),
    "understand": ("understood", "understood"), "wake": ("woke", "woken"),
    "wear": ("wore", "worn"), "weep": ("wept", "wept"),
    "win": ("won", "won"), "wind": ("wound", "wound"),
    "withdraw": ("withdrew", "withdrawn"), "write": ("wrote", "written"),
}

# verbs that double their final consonant although longer than 4 letters
DOUBLE_FINAL = {
    "admit", "begin", "commit", "compel", "control", "defer", "equip",
    "forget", "occur", "omit", "permit", "prefer", "refer", "regret",
    "submit", "transfer", "transmit", "upset",
}


def doubles(v):
    if v in DOUBLE_FINAL:
        return True
    if len(v) > 4:
        return False
    return (
        len(v) >= 3
        and is_consonant(v[-1])
        and v[-1] not in "wxy"
        and v[-2] in VOWELS
        and is_consonant(v[-3])
    )


def verb_3sg(v):
    if v == "go":
        return "goes"
    if v == "do":
        return "does"
    if v == "have":
        return "has"
    if v.endswith("y") and len(v) > 1 and is_consonant(v[-2]):
        return v[:-1] + "ies"
    if v.endswith(("s", "x", "z", "ch", "sh", "o")):
        return v + "es"
    return v + "s"


def verb_ing(v):
    if v.endswith("ie"):
        return v[:-2] + "ying"
    if v.endswith("e") and not v.endswith(("ee", "oe", "ye")):
        return v[:-1] + "ing"
    if doubles(v):
        return v + v[-1] + "ing"
    return v + "ing"


def verb_past(v):
    if v in IRREGULAR_VERBS:
        return None  # handled separately
    if v.endswith("e"):
        return v + "d"
    if v.endswith("y") and len(v) > 1 and is_consonant(v[-2]):
        return v[:-1] + "ied"
    if doubles(v):
        return v + v[-1] + "ed"
    return v + "ed"


# ---------------------------------------------------------------------------
# Closed-class lexicon.
# ---------------------------------------------------------------------------

CLOSED = {
    "DET": """the a an this that these those some any no every each either
        neither both all another such which whose what whatever whichever
        enough several much many most more less fewer little my your his
        its our their""",
    "PRON": """i you he she it we they me him her us them mine yours hers ours
        theirs myself yourself himself herself itself ourselves yourselves
        themselves who whom whoever someone somebody something anyone anybody
        anything everyone everybody everything nobody nothing none oneself
        others one's each other's""",
    "ADP": """in on at by for with about against between into through during
        before after above below to from up down of off over under near
        across behind beyond around among within without along upon toward
        towards inside outside beneath beside besides underneath amid onto
        past per via despite until unless since throughout regarding
        concerning except versus like unlike aboard alongside amongst atop
        circa minus plus than worth""",
    "CONJ": """and or but nor so yet because although though while whereas if
        whether once whenever wherever provided whereupon albeit lest""",
    "AUX": """be am is are was were been being have has had having do does did
        done doing can could will would shall should may might must ought
        cannot ca wo 're 've 'll 'm 'd""",
    "PART": """not n't 's to""",
    "NUM": """zero one two three four five six seven eight nine ten eleven
        twelve thirteen fourteen fifteen sixteen seventeen eighteen nineteen
        twenty thirty forty fifty sixty seventy eighty ninety hundred thousand
        million billion trillion dozen""",
}

# words above that stay out of the open-class expansion
CLOSED_WORDS = set()
for _tag, block in CLOSED.items():
    for w in block.split():
        CLOSED_WORDS.add(w)

# ---------------------------------------------------------------------------
# Open-class base lists.
# ---------------------------------------------------------------------------

NOUNS = """
ability absence abuse access accident account accuracy achievement acid
action activity actor address administration admission adolescent adult
advance advantage adventure advertisement affair affection afternoon age
agency agenda agent agreement agriculture aid aim alarm alcohol algorithm
allergy alternative ambition ambulance amount analysis ancestor anger angle
animal ankle answer antibiotic apartment apology appeal appearance appetite
apple application appointment approach approval area argument arm army
arrangement arrival art article artist aspect aspirin assessment assignment
assistance assistant association assumption asthma atmosphere attack attempt
attention attitude audience aunt author authority autumn average award
awareness baby back background bacteria bag balance ball banana band bandage
bank bar barrier base baseball basis basket bath bathroom battery battle
beach bean bear beauty bed bedroom beer beginning behavior being belief bell
belt bench benefit bias bicycle bill bin biology bird birth birthday biscuit
bit bite blanket block blood board boat body bone bonus book border boss
bottle bottom boundary bowl box boy brain branch bread breakfast breast
breath brick bridge brother budget bug building bunch burden bus business
butter button cabin cabinet cake calendar camera camp campaign campus cancer
candidate capacity capital captain car card care career cart case cash cat
category cause ceiling cell census center century ceremony chain chair
challenge champion chance change channel chapter character charge charity
chart check cheek cheese chemical chemistry chest chicken chief child
childhood chin chocolate choice church cigarette circle circumstance citizen
city claim class classroom client climate clinic clock cloth clothes cloud
club cluster coach coast coat code coffee coin cold colleague collection
college color column combination comfort command comment commission
commitment committee communication community company comparison competition
complaint computer concentration concept concern conclusion condition
conference confidence confirmation conflict confusion connection consequence
constraint consultant contact content contest context contract contrast
contribution control conversation cook cookie cooperation copy corn corner
corporation corridor cost cotton couch cough council counselor count country
countryside county couple courage course court cousin cover cow crash cream
creation creature credit crew crime crisis criterion critic criticism crop
crowd culture cup currency curriculum curtain curve customer cycle dad damage
dance danger darkness data database date daughter dawn day deadline deal
death debate debt decade decision decline decrease deer defeat defense
deficit definition degree delay delivery demand density dentist department
departure deposit depression depth description desert design designer desire
desk dessert destination detail detective device diabetes diagnosis diagram
dialogue diamond diary dictionary diet difference difficulty dinner direction
director dirt disability disaster discipline discount discovery discussion
disease dish distance distribution district diversity division doctor
document dog door dose doubt dozen draft drama drawer drawing dream dress
drink driver drop drug duty ear earthquake ease east economy edge editor
education effect efficiency effort egg elbow election electricity element
elevator emergency emotion emphasis employee employer employment encounter
end enemy energy engine engineer entertainment enthusiasm entrance entry
envelope environment episode equation equipment era error escape essay
estimate ethics evening event evidence exam examination example exception
exchange excitement excuse exercise exit expansion expectation expense
experience experiment expert explanation explosion exposure expression
extension extent eye fabric face facility fact factor factory failure faith
fall family fan farm farmer fashion fat father fault favor fear feature fee
feedback feeling fellow fence festival fever fiction field fight figure file
film finance finding finger fire firm fish fitness flag flavor flight floor
flour flow flower flu fluid focus food foot football force forehead forest
fork form formula fortune foundation frame freedom frequency friend
friendship front fruit frustration fuel fun function fund furniture future
gain gallery game gap garage garbage garden gas gate gathering gear gender
gene generation genius gentleman gesture gift girl glance glass goal gold
golf government grade grain grandfather grandmother grant grass gratitude
grief grocery ground group growth guarantee guard guess guest guidance guide
guideline guilt guitar gun guy gym habit hair half hall hand handful handle
happiness harm harmony hat head headache health heart heat height hell hello
help hero hesitation highway hill hint hip history hobby hole holiday home
homework honesty honey honor hope horizon horror horse hospital host hotel
hour house household housing human humor hunger hurry husband hypothesis ice
icon idea identity illness image imagination impact importance impression
improvement incident income increase independence index indication industry
infection inflation influence information ingredient initiative injury inn
innovation input insect insight inspection inspiration instance instant
instinct institution instruction instrument insulin insurance intelligence
intention interaction interest interpretation interval interview
introduction investment invitation iron island issue item jacket jail jam
job joke journal journey joy judge judgment juice jump jury justice key
keyboard kid kidney kind kindness king kiss kitchen kit knee knife knowledge
lab label labor laboratory lack ladder lady lake lamp land landscape lane
language laptop laughter launch law lawyer layer leader leadership leaf
league lecture leg lemon length lesson letter level library license lid life
lifestyle lift light limit line link lip list literature liver load loan
lobby location lock log logic loss lot love luck luggage lunch lung machine
magazine mail majority manager manner map margin mark market marketing
marriage mass master match material mathematics matrix matter meal meaning
measure measurement meat mechanism medication medicine medium meeting member
membership memory mention menu mess message metal meter method middle
midnight might milk mind mine minister minority minute miracle mirror
mission mistake mixture mode model mom moment money monitor month mood moon
morning mother motion motivation motor mountain mouse mouth move movement
movie mud muscle museum music musician mystery nail name nation nature neck
need needle neighbor neighborhood nerve nest network news newspaper night
noise noon north nose note notebook notice notion novel number nurse nut
obesity object objective obligation observation observer occasion occupation
ocean offer office officer oil onion operation opinion opponent opportunity
option orange order organ organization origin outcome outfit outlet output
oven owner oxygen pace pack package page pain paint painting pair pan panel
panic pant paper paragraph parent park parking part participant partner
party passage passenger passion past path patience patient pattern pause
payment peace peak pen penalty pencil pension pepper percentage perception
performance period permission person personality perspective phase
phenomenon philosophy phone photo photograph phrase physician piano picture
piece pig pile pill pilot pipe pitch pity pizza place plan plane planet
plant plastic plate platform player pleasure plenty pocket poem poet poetry
point poison police policy politician politics pollution pool population
portion position possession possibility pot potato poverty powder power
practice praise prayer precision prediction preference pregnancy preparation
presence present president pressure prevention price pride priest principle
printer priority prison prisoner privacy privilege prize probability problem
procedure process producer product profession professor profile profit
program progress project promise promotion proof property proportion
proposal prospect protein protest psychology public purchase purpose pursuit
quality quantity quarter queen question queue quote race radio rain range
rank rate ratio reaction reader reality reason receipt reception recipe
recognition recommendation record recovery reduction reference reflection
reform refrigerator refugee region register regret regulation rejection
relation relationship relative release relief religion remark reminder
removal rent repair replacement reply report reputation request requirement
rescue research researcher reservation resident resistance resolution
resource respect response responsibility rest restaurant result retirement
return revenue review revolution reward rhythm rice ride ring risk ritual
river road rock role roof room root rope rose routine row rule rumor runner
sadness safety sake salad salary sale salt sample sand sandwich
satisfaction sauce scale scandal scene schedule scheme scholar scholarship
school science scientist score screen script sea search season seat second
secret secretary section sector security seed segment selection self
semester senate senator sense sentence sequence series server service
session setting shadow shame shape share shelf shell shelter shift ship
shirt shock shoe shop shoulder shower side sight sign signal signature
significance silence silver singer sink sir sister site situation size
skill skin skirt sky sleep slice slope smell smile smoke snake snow soap
soccer society sock software soil soldier solution son song sort soul sound
soup source south space speaker specialist species speech speed spirit
spite spoon sport spot spouse spring square stability stack stadium staff
stage stair stake standard star start state statement station statistics
status steak steel step stick stomach stone storage store storm story
stranger strategy stream street strength stress stretch string structure
struggle student studio study stuff style subject substance suburb success
sugar suggestion suit summary summer sun supermarket supply support surface
surgery surprise survey survival suspect symbol sympathy symptom system
table tablet tactic tail talent tank tap target task taste tax taxi tea
teacher team tear technique technology teen teenager telephone television
temperature tendency tension tent term territory test text texture theme
theory therapy thing thought thread threat throat thumb thunder ticket tie
time tip tissue title tobacco toe toilet tomato tone tongue tool tooth top
topic total touch tour tourist towel tower town toy track trade tradition
traffic train trainer training transcript transition transport trash travel
treatment tree trend trial triangle trick trip trouble truck trust truth
tube tunnel turn twin type uncle understanding uniform union unit
university update usage use user vacation vacuum valley value van variable
variation variety vegetable vehicle version victim victory video view
village violence virus visit visitor vision vitamin vocabulary voice volume
volunteer vote wage waist wait waiter walk wall war warmth warning watch
water wave way weakness wealth weapon weather web website wedding week
weekend weight welfare west wheel while wife will wind window wine wing
winner winter wire wisdom wish witness woman wonder wood wool word work
worker workout workplace workshop world worry wound wrist writer writing
yard year youth zone
"""

VERBS = """
accept access accompany accomplish accuse ache achieve acknowledge acquire
act adapt add address adjust admire admit adopt advance advise affect afford
agree aim alert allow analyze announce annoy answer anticipate apologize
appeal appear applaud apply appoint appreciate approach approve argue arise
arrange arrest arrive ask assess assign assist assume assure attach attack
attempt attend attract avoid awake bake balance ban bang base bear beat
become beg begin behave believe belong bend benefit bet bind bite blame
bleed bless blink block blow boil book boost borrow bother bounce bow brag
break breathe breed bring broadcast brush build burn burst bury buy
calculate call calm camp cancel capture care carry catch cause celebrate
challenge change charge chase chat cheat check cheer chew choose chop claim
clap clarify classify clean clear click climb cling close coach collapse
collect combine come comfort command comment commit communicate compare
compel compete complain complete compose compute conclude conduct confirm
confront confuse connect consider consist construct consult consume contact
contain continue contribute control convert convince cook cooperate cope
copy correct cough count cover crash crawl create creep critique cross cry
cut damage dance dare deal decide declare decline decorate decrease dedicate defeat
defend defer define delay deliver demand demonstrate deny depart depend
describe deserve design desire destroy detect determine develop devote
diagnose die dig direct disagree disappear discover discuss dislike dismiss
display distribute dive divide do dominate donate doubt drag draw dream
dress drift drink drive drop drown earn eat echo edit educate elect
eliminate embrace emerge emphasize employ enable encounter encourage end
endure engage enhance enjoy enroll ensure enter entertain equip escape
establish estimate evaluate examine exceed exchange exclude excuse exercise
exist expand expect experience explain explore express extend face fail
fall fear feed feel fight fill find finish fit fix flee fling float flow
fly focus fold follow forbid force forget forgive form freeze frighten
frustrate fulfill gain gather generate give glance go grab graduate grant
greet grind grow guarantee guard guess guide handle hang happen harm hate
heal hear help hesitate hide hire hit hold hop hope hug hunt hurry hurt
identify ignore illustrate imagine implement imply import impose impress
improve include increase indicate influence inform initiate injure insist
inspect inspire install integrate intend interact interfere interpret
interrupt interview introduce invent invest investigate invite involve
isolate join joke judge jump justify keep kick kill kiss kneel knock know
lack land last laugh launch lead lean leap learn leave lend let lick
lie lift light limit link list listen live load lock log look lose love
maintain make manage manipulate mark marry match matter mean measure meet
melt mention mind miss mix modify monitor motivate move multiply name
navigate need neglect negotiate nod notice notify obey object observe
obtain occur offer omit open operate oppose organize overcome owe own pack
paint park participate pass pause pay perceive perform permit persist
persuade pick plan play plead pledge point possess postpone pour practice
praise pray predict prefer prepare present preserve press pretend prevent
print proceed produce promise promote propose protect protest prove provide
publish pull punish push qualify quit raise reach react read realize
recall receive recognize recommend record recover reduce refer reflect
refuse regret reject relate relax release relieve rely remain remember
remind remove renew rent repair repeat replace reply report represent
request require rescue resist resolve respect respond rest restore
restrict result retain retire return reveal review revise reward ride ring
rise risk roll rub ruin rule run rush satisfy save say scan scare scatter
schedule scream search seek seem select sell send serve set settle shake
shape share shed shift shine shoot shop shout show shrink shut sigh sign
sing sink sit slide slip smell smile smoke snap sneeze solve sort sound
speak specify speed spell spend spill spin spot spread spring squeeze stand
stare start starve state stay steal stick sting stir stop store stretch
strike struggle study submit succeed suffer suggest suit supply support
suppose surround survive suspect swallow swear sweep swim swing switch
take talk teach tear tell tend test thank think threaten throw tie touch
trace track trade train transfer transform translate transmit travel treat
tremble trust try turn understand undergo unite update upgrade upset urge
vanish vary verify visit wait wake walk wander want warn wash waste watch
wave wear weigh welcome whisper win wipe wish withdraw witness wonder work
worry wrap write yell
"""

ADJECTIVES = """
able absent abstract academic acceptable accurate active actual acute
additional adequate administrative advanced adverse afraid aggressive alert
alive alone amazing ambitious ancient angry annual anonymous anxious
apparent appropriate arbitrary artificial ashamed asleep automatic available
average awake aware awful awkward bare basic beautiful big bitter bizarre
black blank blind blue bold boring brave brief bright brilliant broad broken
brown busy calm capable careful careless casual cautious central certain
cheap chronic civil classic clean clear clever clinical cold colorful
comfortable common compact competitive complete complex comprehensive
concrete confident conscious conservative considerable consistent constant
contemporary content convenient conventional cool corporate correct
courageous crazy creative critical crowded crucial cruel cultural curious
current cute daily dangerous dark dead deaf dear decent deep defensive
delicate delicious democratic dense dependent depressed desperate detailed
different difficult digital diligent direct dirty disabled distant distinct
diverse divine dizzy domestic double dramatic drunk dry dual due dull dumb
dynamic eager early eastern economic educational effective efficient
elderly electric electronic elegant eligible embarrassed emotional empty
enormous entire environmental equal equivalent essential eternal ethical
ethnic evident exact excess exclusive expensive experimental explicit
external extra extraordinary extreme fair faithful fake false familiar
famous fancy fast fat fatal favorable federal fellow female fierce final
financial fine firm fiscal fit flat flexible fluent fond foreign formal
former fortunate fragile free frequent fresh friendly full fundamental funny
furious future general generous genetic gentle genuine giant glad global
golden good gorgeous gradual grand grateful gray great green gross guilty
handsome handy happy hard harsh healthy heavy helpful hidden high hilarious
historic historical hollow holy honest hopeful horizontal horrible hostile
hot huge humble hungry ideal identical ill illegal immediate immense immune
implicit important impossible impressive inclusive incredible independent
indirect individual industrial inevitable infamous infinite informal
initial inner innocent intact integral intellectual intelligent intense
interior intermediate internal international intimate invisible involved
irregular isolated joint junior just juvenile keen key kind large late
lateral lazy legal legitimate lengthy lethal liable liberal light lightweight
likely limited linear liquid literary little live lively local logical
lonely long loose loud low loyal lucky mad magnetic main major male
mandatory manual marginal marine married massive mature maximum mean
meaningful medical medium mental mere messy middle mild military minimal
minimum minor miserable mobile moderate modern modest moist molecular
monthly moral mutual mysterious naked narrow nasty national native natural
nearby neat necessary negative nervous neutral new nice noble noisy normal
northern notable nuclear numerous nutritious obese obvious occasional odd
official okay old online only open operational opposite optimal optimistic
oral ordinary organic original other outdoor outer outstanding overall
overweight painful pale parallel partial particular passionate passive
patient peaceful peculiar perfect permanent persistent personal physical
pink plain pleasant polite political poor popular portable positive
possible potential powerful practical precious precise pregnant preliminary
premium present previous primary prime principal prior private probable
productive professional profound prominent prompt proper proud
psychological pure purple qualified quick quiet random rapid rare rational
raw ready real realistic reasonable recent red regional regular relative
relevant reliable religious remarkable remote renewable repeated
residential responsible retail rich ridiculous rigid ripe risky rival rough
round routine royal rubber rude rural sacred sad safe salty same scarce
scared scientific secondary secret secular secure selfish senior
sensible sensitive separate serious severe shallow sharp shiny short shy
sick significant silent silly similar simple sincere single skilled sleepy
slight slim slow small smart smooth social soft solar sole solid sore
sorry southern spare spatial special specific spicy spiritual stable
standard statistical steady steep sticky stiff still straight strange
strategic strict strong structural stubborn stupid subsequent subtle
successful sudden sufficient suitable sunny super superb superior sure
surgical suspicious sweet swift symbolic systematic tall technical
temporary tender terminal terrible theoretical thick thin thirsty thorough
tight tiny tired top tough toxic traditional tragic tremendous tropical
true typical ugly ultimate unable uncertain uncomfortable unconscious
underlying unemployed unexpected unfair unhappy uniform unique universal
unknown unlikely unusual upset urban urgent useful useless usual vacant
vague valid valuable variable various vast verbal vertical viable violent
virtual visible visual vital vivid vocal voluntary vulnerable warm weak
wealthy weekly weird western wet white whole wide wild willing wise witty
wonderful wooden worthy wrong yellow young
"""

ADVERBS = """
abroad absolutely accordingly actually afterwards again ago ahead almost always anymore
aloud already also altogether anyway anywhere apart apparently approximately
aside asleep automatically away back backward barely basically beforehand
behind besides briefly carefully certainly clearly closely commonly
completely consequently considerably constantly currently daily deeply
definitely deliberately differently directly downstairs downtown early
easily effectively elsewhere entirely equally especially essentially even
eventually ever everywhere exactly extremely fairly fast finally forever
formerly forth forward frequently fully furthermore generally gently
gradually greatly hard hardly hence here highly home hopefully however
immediately increasingly indeed indoors inevitably initially instead
largely late lately later least likewise literally mainly maybe meanwhile
merely moreover mostly naturally nearly necessarily never nevertheless
newly next nonetheless normally now nowadays nowhere obviously occasionally
often once only originally otherwise outdoors overall overseas partly
perfectly perhaps permanently personally possibly precisely previously
primarily probably promptly properly quickly quietly quite rapidly rarely
rather readily really recently regularly relatively repeatedly respectively
roughly seldom seriously significantly similarly simply slightly slowly
smoothly sometime sometimes somehow somewhat somewhere soon too just
specifically steadily still strongly subsequently successfully suddenly
sufficiently surely surprisingly temporarily then thereby therefore thus
today together tomorrow tonight totally truly twice typically ultimately
underground unfortunately upstairs upward usually utterly very virtually
well widely yesterday yet
"""

# adjectives whose -ly derivation is wrong or already listed
NO_LY = {
    "good", "fast", "hard", "early", "late", "long", "low", "high", "fine",
    "fat", "flat", "big", "small", "old", "young", "little", "live", "only",
    "likely", "unlikely", "friendly", "lonely", "silly", "ugly", "holy",
    "daily", "weekly", "monthly", "lively", "elderly", "lovely", "deadly",
    "costly", "yellow", "pink", "purple", "red", "blue", "green", "brown",
    "black", "white", "gray", "golden", "wooden", "rubber", "due", "okay",
    "top", "spare", "fellow", "key", "premium", "retail", "still", "well",
    "mean", "dear", "same", "other", "very",
}


def ly_adverb(adj):
    if adj in NO_LY or adj.endswith("ly"):
        return None
    if adj.endswith("y") and len(adj) > 2 and is_consonant(adj[-2]):
        return adj[:-1] + "ily"
    if adj.endswith("le") and len(adj) > 3 and is_consonant(adj[-3]):
        return adj[:-1] + "y"
    if adj.endswith("ic"):
        return adj + "ally"
    if adj.endswith("ll"):
        return adj + "y"
    if adj.endswith("ue"):
        return adj[:-1] + "ly"
    return adj + "ly"


# common comparative and superlative adjective forms, shipped with their
# base adjective as the lemma
COMPARATIVES = [
    ("better", "good"), ("best", "good"), ("worse", "bad"), ("worst", "bad"),
    ("larger", "large"), ("largest", "large"), ("bigger", "big"),
    ("biggest", "big"), ("smaller", "small"), ("smallest", "small"),
    ("earlier", "early"), ("earliest", "early"), ("higher", "high"),
    ("highest", "high"), ("lower", "low"), ("lowest", "low"),
    ("older", "old"), ("oldest", "old"), ("younger", "young"),
    ("youngest", "young"), ("easier", "easy"), ("easiest", "easy"),
    ("happier", "happy"), ("happiest", "happy"), ("harder", "hard"),
    ("hardest", "hard"), ("stronger", "strong"), ("strongest", "strong"),
    ("weaker", "weak"), ("weakest", "weak"), ("slower", "slow"),
    ("slowest", "slow"), ("faster", "fast"), ("fastest", "fast"),
    ("cheaper", "cheap"), ("cheapest", "cheap"), ("louder", "loud"),
    ("loudest", "loud"), ("darker", "dark"), ("darkest", "dark"),
    ("colder", "cold"), ("coldest", "cold"), ("warmer", "warm"),
    ("warmest", "warm"), ("safer", "safe"), ("safest", "safe"),
    ("nicer", "nice"), ("nicest", "nice"), ("cleaner", "clean"),
    ("cleanest", "clean"), ("longer", "long"), ("longest", "long"),
    ("shorter", "short"), ("shortest", "short"), ("deeper", "deep"),
    ("deepest", "deep"), ("closer", "close"), ("closest", "close"),
    ("greater", "great"), ("greatest", "great"), ("newer", "new"),
    ("newest", "new"), ("wider", "wide"), ("widest", "wide"),
]

# surfaces whose most frequent reading differs from what expansion would give
TAG_OVERRIDES = {
    "saw": "VERB", "left": "VERB", "felt": "VERB", "found": "VERB",
    "means": "VERB", "meeting": "NOUN", "building": "NOUN",
    "feeling": "NOUN", "finding": "NOUN", "painting": "NOUN",
    "training": "NOUN", "warning": "NOUN", "writing": "NOUN",
    "drawing": "NOUN", "setting": "NOUN", "opening": "NOUN",
    "beginning": "NOUN", "ending": "NOUN", "gathering": "NOUN",
    "said": "VERB", "being": "AUX", "used": "VERB", "living": "ADJ",
    "working": "VERB", "thinking": "VERB", "rose": "VERB", "ground": "NOUN",
    "bit": "NOUN", "bound": "VERB", "lay": "VERB", "mine": "PRON",
    "wound": "NOUN", "fell": "VERB", "leaves": "VERB", "close": "ADJ",
    # noun/verb base pairs where the verb reading dominates
    "walk": "VERB", "walks": "VERB", "visit": "VERB", "visits": "VERB",
    "help": "VERB", "helps": "VERB", "need": "VERB", "needs": "VERB",
    "use": "VERB", "uses": "VERB", "work": "VERB", "works": "VERB",
    "move": "VERB", "moves": "VERB", "turn": "VERB", "turns": "VERB",
    "change": "VERB", "wait": "VERB", "waits": "VERB",
    "watch": "VERB", "watches": "VERB", "worry": "VERB", "worries": "VERB",
    "hope": "VERB", "hopes": "VERB", "love": "VERB", "loves": "VERB",
    "start": "VERB", "starts": "VERB", "wish": "VERB", "wishes": "VERB",
    "wonder": "VERB", "wonders": "VERB", "guess": "VERB", "guesses": "VERB",
    "smile": "VERB", "smiles": "VERB",
    "drink": "VERB", "drinks": "VERB", "cook": "VERB", "cooks": "VERB",
    "dance": "VERB", "dances": "VERB", "jump": "VERB", "jumps": "VERB",
    "kiss": "VERB", "kisses": "VERB", "count": "VERB", "counts": "VERB",
    "check": "VERB", "checks": "VERB", "cough": "VERB", "coughs": "VERB",
    "increase": "VERB", "increases": "VERB", "causes": "VERB",
    "covers": "VERB", "offers": "VERB", "notice": "VERB", "fall": "VERB",
    "smoking": "NOUN",
    # ambiguous adjective/adverb/verb surfaces
    "clear": "ADJ", "clean": "ADJ", "calm": "ADJ", "alert": "ADJ",
    "awake": "ADJ", "fit": "ADJ", "upset": "ADJ", "correct": "ADJ",
    "last": "ADJ",
    "direct": "ADJ", "present": "ADJ", "live": "VERB", "still": "ADV",
    "only": "ADV", "daily": "ADV",
}

# ---------------------------------------------------------------------------
# Stopwords, gazetteer, abbreviations.
# ---------------------------------------------------------------------------

EXTRA_STOPWORDS = """
just very too also then there here when where why how again further once
now only own same so until as other
"""

GAZETTEER = """
aaron abigail adam alan albert alex alexander alice amanda amber amy andrea
andrew angela ann anna anne anthony arthur ashley austin barbara benjamin
beth betty beverly bill billy bob bobby brandon brenda brian bruce bryan
carl carlos carol caroline carolyn catherine chad charles charlotte chris
christian christina christine christopher cindy claire clara cynthia dan
daniel danielle dave david dawn debbie deborah debra dennis diana diane
donald donna doris dorothy doug douglas dylan earl edward elaine eleanor
elizabeth ella ellen emily emma eric erin ethan eugene evelyn frances frank
fred gabriel gary george gerald gloria grace greg gregory hannah harold
harry heather helen henry howard irene isaac isabella jack jacob jacqueline
james jamie jane janet janice jason jean jeff jeffrey jennifer jeremy jerry
jesse jessica jill jim joan joanne joe joel john johnny jonathan jordan jose
joseph joshua joyce juan judith judy julia julie justin karen katherine
kathleen kathryn kathy katie keith kelly ken kenneth kevin kim kimberly kyle
larry laura lauren lawrence lee leonard linda lisa logan lois lori louis
louise lucas lucy luke madison marc margaret maria marie marilyn mark martha
martin mary mason matthew megan melissa michael michelle mike nancy natalie
nathan nicholas nicole noah norma norman olivia oscar pamela patricia
patrick paul paula peggy peter philip phillip phyllis rachel ralph randy
raymond rebecca richard rick robert robin roger ronald rose roy russell
ruth ryan sam samantha samuel sandra sara sarah scott sean sharon shirley
sophia stanley stephanie stephen steve steven susan sylvia tammy ted teresa
terry theresa thomas tiffany tim timothy tina todd tom tony tracy tyler
victor victoria vincent virginia walter wayne wendy william willie zachary
zoe
africa alabama alaska alberta amsterdam antarctica argentina arizona asia
athens atlanta australia austria baghdad baltimore bangkok barcelona
beijing belgium berlin boston brazil brisbane britain brooklyn brussels
budapest buffalo cairo calgary california cambridge canada chicago chile
china cincinnati cleveland colombia colorado columbus connecticut
copenhagen cuba dallas delhi denmark denver detroit dublin edinburgh egypt
england ethiopia europe finland florida france frankfurt geneva georgia
germany glasgow greece hamburg hawaii helsinki holland hollywood houston
hungary iceland idaho illinois india indiana indianapolis indonesia iowa
iran iraq ireland israel istanbul italy jakarta jamaica japan jerusalem
jordan kansas kentucky kenya korea kuwait lebanon lisbon london louisiana
madrid maine manchester manhattan manila maryland massachusetts melbourne
memphis mexico miami michigan milan minneapolis minnesota mississippi
missouri montana montreal morocco moscow mumbai munich nashville nebraska
netherlands nevada newark nigeria norway ohio oklahoma ontario oregon
orlando oslo ottawa oxford pakistan paris pennsylvania peru philadelphia
philippines phoenix pittsburgh poland portland portugal prague quebec
rome russia sacramento scotland seattle seoul shanghai singapore somalia
spain stockholm sudan sweden switzerland sydney syria taiwan tehran texas
thailand tokyo toronto turkey ukraine utah venice vermont vienna vietnam
virginia wales warsaw washington wisconsin wyoming york zurich
"""

ABBREVIATIONS = """
dr. mr. mrs. ms. prof. st. jr. sr. e.g. i.e. etc. vs. no. fig. vol. dept.
approx. jan. feb. mar. apr. jun. jul. aug. sep. sept. oct. nov. dec. mon.
tue. wed. thu. fri. sat. sun. cf. al. ca. est. min. max. misc. ph.d. m.d.
b.a. m.a. u.s. u.k. inc. ltd. co. corp. ave. blvd. rd. hr. gen. rep. sen.
rev. hon. capt. lt. col. sgt. assn. bros. div. ed. eds. pp. op. cit. viz.
"""

# ---------------------------------------------------------------------------
# Sentiment lexicon (VADER-style valences in [-4, 4]).
# ---------------------------------------------------------------------------

# tokens the scorer treats as negators or boosters; they carry no valence
NEGATORS = """
not n't never no none nobody nothing neither nor nowhere cannot without
rarely seldom hardly scarcely barely lack lacking lacks despite
""".split()

BOOSTERS = """
absolutely amazingly awfully completely considerably decidedly deeply
enormously entirely especially exceptionally extremely fabulously highly
hugely incredibly intensely majorly more most particularly purely quite
really remarkably so substantially thoroughly totally tremendously
uber unbelievably unusually utterly very almost barely hardly just kind
kinda less little marginally occasionally partly scarcely slightly
somewhat sort sorta
""".split()

SENTIMENT_BASES = {
    # positive
    "able": 1.0, "abundant": 1.6, "accept": 1.2, "acclaim": 2.0,
    "accomplish": 1.9, "achieve": 1.8, "admire": 2.2, "adorable": 2.6,
    "adore": 2.9, "advantage": 1.7, "adventure": 1.4, "affection": 2.4,
    "agree": 1.5, "alive": 1.6, "amaze": 2.5, "amazing": 2.8,
    "ambitious": 1.5, "amuse": 1.7, "appreciate": 2.0, "approve": 1.6,
    "assure": 1.3, "attract": 1.6, "attractive": 1.9, "awesome": 3.1,
    "beautiful": 2.9, "beauty": 2.5, "believe": 1.1, "beloved": 2.9,
    "benefit": 1.6, "best": 3.2, "better": 1.9, "bless": 2.3,
    "blessing": 2.6, "bliss": 2.9, "bold": 1.2, "bonus": 1.8,
    "brave": 2.3, "bright": 1.9, "brilliant": 2.8, "calm": 1.3,
    "capable": 1.4, "care": 1.5, "carefree": 1.8, "caring": 2.2,
    "celebrate": 2.4, "champion": 2.4, "charm": 1.9, "charming": 2.3,
    "cheer": 2.3, "cheerful": 2.5, "cherish": 2.3, "clean": 1.7,
    "clear": 1.0, "clever": 2.0, "comfort": 1.6, "comfortable": 1.9,
    "commend": 1.8, "compassion": 2.2, "compliment": 1.9, "confident": 2.2,
    "congratulate": 2.2, "convenient": 1.4, "cool": 1.3, "courage": 2.2,
    "courageous": 2.5, "creative": 1.9, "credible": 1.3, "cute": 2.0,
    "decent": 1.1, "dedicated": 1.7, "delicious": 2.5, "delight": 2.7,
    "delightful": 2.8, "desire": 1.2, "devoted": 1.9, "dream": 1.1,
    "eager": 1.5, "ease": 1.2, "easy": 1.4, "ecstatic": 3.3,
    "efficient": 1.5, "elegant": 2.1, "empower": 1.8, "encourage": 2.0,
    "energetic": 1.9, "engaging": 1.6, "enjoy": 2.2, "enthusiasm": 2.1,
    "enthusiastic": 2.3, "excellent": 3.1, "excite": 2.2, "excited": 2.4,
    "excitement": 2.5, "exquisite": 2.6, "fabulous": 2.9, "fair": 1.4,
    "faith": 1.8, "faithful": 2.1, "fantastic": 2.9, "fascinate": 2.1,
    "favor": 1.4, "favorite": 2.0, "fearless": 1.9, "festive": 2.0,
    "fine": 0.8, "flawless": 2.7, "fond": 1.8, "forgive": 1.5,
    "fortunate": 2.1, "free": 1.6, "freedom": 2.2, "fresh": 1.3,
    "friend": 2.2, "friendly": 2.2, "fulfill": 1.7, "fun": 2.3,
    "funny": 1.9, "generous": 2.3, "gentle": 1.8, "genuine": 1.6,
    "gift": 1.9, "glad": 2.0, "glorious": 2.8, "glory": 2.3,
    "good": 1.9, "gorgeous": 2.8, "grace": 1.9, "graceful": 2.2,
    "gracious": 2.3, "grand": 2.1, "grateful": 2.3, "gratitude": 2.3,
    "great": 3.1, "greatest": 3.2, "grin": 1.7, "happiness": 2.8,
    "happy": 2.7, "harmless": 1.0, "harmony": 2.1, "heal": 1.8,
    "healthy": 1.9, "heaven": 2.5, "heavenly": 2.6, "help": 1.7,
    "helpful": 1.9, "heroic": 2.6, "honest": 2.1, "honor": 2.2,
    "hope": 1.9, "hopeful": 2.1, "hug": 2.1, "humor": 1.6,
    "ideal": 2.2, "importance": 1.2, "important": 1.2, "impress": 2.0,
    "impressive": 2.3, "improve": 1.7, "improvement": 1.7, "innocent": 1.4,
    "inspiration": 2.3, "inspire": 2.3, "intelligent": 2.2, "interest": 1.3,
    "interested": 1.5, "interesting": 1.7, "joy": 2.8, "joyful": 2.9,
    "keen": 1.4, "kind": 2.0, "kindness": 2.5, "laugh": 2.2,
    "lively": 1.9, "love": 3.2, "lovely": 2.8, "loyal": 2.1,
    "lucky": 2.4, "magnificent": 2.9, "marvelous": 2.8, "masterpiece": 2.7,
    "mercy": 1.7, "merry": 2.4, "motivate": 1.8, "neat": 1.6,
    "nice": 1.8, "noble": 2.0, "optimistic": 2.2, "outstanding": 2.8,
    "paradise": 2.9, "passion": 2.2, "passionate": 2.3, "peace": 2.4,
    "peaceful": 2.4, "perfect": 2.7, "play": 1.3, "playful": 1.9,
    "pleasant": 2.1, "please": 1.5, "pleased": 2.0, "pleasure": 2.5,
    "popular": 1.8, "positive": 2.0, "praise": 2.3, "precious": 2.3,
    "prefer": 1.0, "pretty": 2.1, "privilege": 1.8, "prize": 1.9,
    "progress": 1.5, "promise": 1.4, "promising": 1.9, "prosper": 2.1,
    "prosperity": 2.2, "protect": 1.5, "proud": 2.2, "radiant": 2.4,
    "recommend": 1.6, "refresh": 1.6, "relax": 1.8, "relief": 1.9,
    "relieve": 1.6, "remarkable": 2.4, "rescue": 1.6, "resolve": 1.2,
    "respect": 2.1, "reward": 2.0, "rich": 2.0, "right": 1.4,
    "robust": 1.4, "romantic": 2.2, "safe": 1.8, "satisfaction": 2.0,
    "satisfy": 1.8, "secure": 1.5, "sensational": 2.5, "share": 1.2,
    "shine": 1.7, "smart": 2.1, "smile": 2.3, "smooth": 1.4,
    "soothe": 1.6, "special": 1.8, "splendid": 2.8, "strength": 1.8,
    "strong": 1.9, "succeed": 2.1, "success": 2.4, "successful": 2.4,
    "super": 2.6, "superb": 2.9, "superior": 2.0, "support": 1.6,
    "supportive": 2.0, "supreme": 2.3, "sweet": 2.1, "talent": 1.9,
    "talented": 2.2, "terrific": 2.9, "thank": 1.8, "thankful": 2.2,
    "thoughtful": 1.9, "thrill": 2.4, "thrilled": 2.7, "treasure": 2.2,
    "triumph": 2.6, "trust": 1.9, "truthful": 1.9, "useful": 1.7,
    "valuable": 1.9, "value": 1.4, "vibrant": 2.1, "victory": 2.6,
    "warm": 1.7, "wealthy": 1.9, "welcome": 1.9, "win": 2.5,
    "winner": 2.6, "wise": 2.0, "wish": 1.1, "wonderful": 2.9,
    "worthy": 1.8, "wow": 2.8, "yes": 1.3,
    # negative
    "abandon": -1.9, "abuse": -2.8, "accuse": -1.8, "ache": -1.6,
    "afraid": -2.0, "aggressive": -1.5, "agony": -2.9, "alarm": -1.4,
    "alone": -1.2, "anger": -2.5, "angry": -2.3, "annoy": -1.8,
    "annoying": -1.9, "anxiety": -2.0, "anxious": -1.7, "apathy": -1.4,
    "appall": -2.2, "argue": -1.4, "arrogant": -2.1, "ashamed": -1.9,
    "attack": -1.9, "avoid": -1.0, "awful": -2.7, "awkward": -1.3,
    "bad": -2.5, "banish": -1.8, "betray": -2.6, "bitter": -1.8,
    "blame": -1.7, "bleak": -1.8, "bore": -1.3, "boring": -1.5,
    "bother": -1.4, "broke": -1.5, "broken": -1.8, "brutal": -2.6,
    "burden": -1.5, "catastrophe": -2.9, "chaos": -2.0, "cheat": -2.3,
    "collapse": -1.7, "complain": -1.6, "complaint": -1.5, "conflict": -1.5,
    "confuse": -1.3, "confused": -1.4, "confusion": -1.4, "corrupt": -2.4,
    "coward": -2.0, "crash": -1.7, "crazy": -1.4, "crime": -2.3,
    "criminal": -2.3, "crisis": -2.2, "critical": -1.2, "criticism": -1.5,
    "criticize": -1.6, "cruel": -2.6, "cry": -1.9, "damage": -1.9,
    "danger": -2.2, "dangerous": -2.2, "dark": -1.1, "dead": -2.8,
    "deadly": -2.6, "death": -2.9, "deceive": -2.2, "defeat": -1.8,
    "defect": -1.6, "deny": -1.2, "depress": -2.2, "depressed": -2.3,
    "depressing": -2.2, "depression": -2.3, "despair": -2.6, "desperate": -2.0,
    "destroy": -2.4, "destruction": -2.3, "devastate": -2.8, "die": -2.7,
    "difficult": -1.4, "dirty": -1.7, "disappoint": -2.1, "disappointed": -2.2,
    "disappointment": -2.2, "disaster": -2.7, "disease": -2.1, "disgrace": -2.2,
    "disgust": -2.5, "disgusting": -2.6, "dishonest": -2.2, "dislike": -1.7,
    "dismal": -2.0, "distress": -2.0, "disturb": -1.6, "doom": -2.3,
    "doubt": -1.2, "dread": -2.2, "dreadful": -2.6, "dull": -1.3,
    "dumb": -2.0, "dying": -2.8, "embarrass": -1.8, "emergency": -1.9,
    "enemy": -2.1, "enrage": -2.5, "evil": -3.0, "fail": -2.0,
    "failure": -2.2, "fake": -1.7, "fatal": -2.5, "fault": -1.5,
    "fear": -2.1, "fearful": -2.1, "fight": -1.6, "filthy": -2.2,
    "foolish": -1.7, "forbid": -1.3, "fraud": -2.5, "frantic": -1.6,
    "fright": -2.0, "frighten": -2.1, "frustrate": -1.9, "frustrated": -2.0,
    "frustrating": -2.0, "frustration": -2.0, "furious": -2.6, "gloom": -2.0,
    "gloomy": -2.0, "greed": -2.1, "greedy": -2.1, "grief": -2.4,
    "grim": -1.9, "gross": -1.9, "guilt": -1.9, "guilty": -1.9,
    "harm": -2.0, "harmful": -2.1, "harsh": -1.8, "hate": -2.7,
    "hateful": -2.7, "hatred": -2.9, "hell": -2.4, "helpless": -1.9,
    "hideous": -2.4, "hopeless": -2.3, "horrible": -2.7, "horrific": -2.9,
    "horror": -2.6, "hostile": -2.1, "humiliate": -2.4, "hunger": -1.6,
    "hurt": -2.1, "idiot": -2.3, "ignorant": -1.9, "ignore": -1.3,
    "ill": -1.8, "illegal": -2.1, "illness": -1.9, "inadequate": -1.5,
    "incompetent": -2.0, "inferior": -1.7, "injure": -1.9, "injury": -1.8,
    "insane": -1.9, "insult": -2.2, "jealous": -1.8, "kill": -2.9,
    "lazy": -1.6, "lie": -1.9, "liar": -2.4, "lonely": -1.9,
    "loser": -2.3, "loss": -1.6, "lost": -1.4, "mad": -2.0,
    "menace": -1.9, "mess": -1.4, "miserable": -2.5, "misery": -2.6,
    "miss": -0.8, "mistake": -1.6, "mock": -1.8, "mourn": -2.2,
    "murder": -3.2, "nasty": -2.3, "negative": -1.8, "neglect": -1.8,
    "nervous": -1.5, "nightmare": -2.5, "offend": -1.9, "outrage": -2.4,
    "pain": -2.3, "painful": -2.3, "panic": -2.1, "pathetic": -2.2,
    "pessimistic": -1.8, "pitiful": -2.0, "pity": -1.3, "poison": -2.2,
    "poor": -1.7, "poverty": -2.1, "problem": -1.4, "protest": -1.1,
    "punish": -1.9, "rage": -2.5, "reject": -1.8, "rejection": -1.9,
    "resent": -1.8, "revenge": -2.1, "ridiculous": -1.6, "risk": -1.1,
    "rotten": -2.2, "rude": -2.0, "ruin": -2.1, "sad": -2.1,
    "sadness": -2.2, "scam": -2.4, "scandal": -2.0, "scare": -1.9,
    "scared": -2.0, "scary": -2.0, "selfish": -2.0, "severe": -1.7,
    "shame": -2.1, "shameful": -2.3, "shock": -1.6, "sick": -1.9,
    "sin": -1.9, "sorrow": -2.3, "sorry": -0.6, "steal": -2.2,
    "stress": -1.8, "stressful": -1.9, "struggle": -1.5, "stupid": -2.2,
    "suck": -1.9, "suffer": -2.3, "suffering": -2.3, "suspicious": -1.4,
    "terrible": -2.7, "terror": -2.8, "threat": -1.9, "threaten": -2.0,
    "tired": -1.2, "torture": -2.9, "toxic": -2.2, "tragedy": -2.6,
    "tragic": -2.5, "trauma": -2.4, "trouble": -1.7, "ugly": -2.2,
    "unable": -1.1, "uncomfortable": -1.5, "unfair": -2.0, "unfortunate": -1.9,
    "unhappy": -2.2, "unpleasant": -1.9, "unsafe": -1.8, "upset": -1.9,
    "useless": -1.9, "victim": -1.6, "villain": -2.4, "violence": -2.6,
    "violent": -2.5, "vulnerable": -1.3, "war": -2.6, "warn": -1.2,
    "waste": -1.6, "weak": -1.6, "weep": -2.0, "weird": -0.9,
    "wicked": -2.3, "worry": -1.8, "worried": -1.8, "worse": -2.1,
    "worst": -3.1, "worthless": -2.3, "wound": -1.9, "wreck": -2.0,
    "wrong": -1.7,
}

SENTIMENT_BASES.update({
    # positive
    "adept": 1.6, "admirable": 2.3, "advantageous": 1.8, "affable": 1.9,
    "affirm": 1.3, "affordable": 1.4, "agreeable": 1.7, "alright": 0.9,
    "ample": 1.3, "ardent": 1.6, "aspire": 1.5, "assurance": 1.2,
    "astonish": 2.0, "astounding": 2.5, "attentive": 1.6, "avid": 1.4,
    "award": 2.0, "beaming": 2.3, "benevolent": 2.3, "blissful": 3.0,
    "bloom": 1.7, "bountiful": 2.0, "breathtaking": 2.8, "buoyant": 1.8,
    "captivate": 2.1, "celebrated": 2.2, "celebration": 2.4, "charitable": 2.0,
    "cheery": 2.3, "classy": 1.9, "comfy": 1.8, "commendable": 2.1,
    "committed": 1.4, "compassionate": 2.4, "competent": 1.6,
    "complimentary": 1.8, "congenial": 1.8, "considerate": 2.0,
    "constructive": 1.6, "contented": 1.9, "contentment": 2.0,
    "courteous": 1.9, "cozy": 1.9, "dazzle": 2.2, "dazzling": 2.5,
    "decisive": 1.3, "dedicate": 1.5, "delectable": 2.4, "dependable": 1.8,
    "deserving": 1.6, "desirable": 1.8, "determined": 1.6, "devotion": 2.1,
    "dignified": 1.8, "dignity": 1.9, "diligent": 1.7, "divine": 2.4,
    "earnest": 1.5, "effortless": 1.6, "elated": 2.8, "elation": 2.8,
    "elite": 1.7, "eloquent": 2.0, "eminent": 1.8, "empathy": 1.9,
    "enchant": 2.2, "enchanting": 2.4, "endorse": 1.4, "energize": 1.8,
    "enjoyable": 2.2, "enjoyment": 2.3, "enlighten": 1.9, "enrich": 1.8,
    "epic": 2.2, "esteem": 1.9, "euphoria": 3.1, "euphoric": 3.1,
    "exceptional": 2.5, "exhilarate": 2.5, "exhilarating": 2.7,
    "exuberant": 2.4, "fascinating": 2.2, "favorable": 1.9, "fervent": 1.6,
    "flatter": 1.4, "flourish": 2.0, "fortune": 1.8, "fragrant": 1.6,
    "friendship": 2.3, "gallant": 1.9, "gem": 1.9, "gifted": 2.1,
    "glee": 2.6, "gleeful": 2.7, "glow": 1.7, "goodness": 2.2,
    "goodwill": 2.1, "grandeur": 2.1, "gratify": 1.9, "gratifying": 2.1,
    "heartfelt": 2.2, "heartwarming": 2.6, "hilarious": 2.3, "honorable": 2.1,
    "hooray": 2.3, "hospitable": 1.9, "humane": 1.9, "humorous": 1.8,
    "illuminating": 1.7, "immaculate": 2.3, "incredible": 2.6, "indulge": 1.3,
    "ingenious": 2.3, "innovative": 1.8, "insightful": 1.9, "inspiring": 2.4,
    "integrity": 2.0, "intrigue": 1.3, "intriguing": 1.6, "inviting": 1.7,
    "irresistible": 2.1, "jolly": 2.3, "jubilant": 2.7, "laudable": 2.0,
    "lavish": 1.5, "legendary": 2.2, "liberate": 1.8, "liberty": 2.0,
    "likable": 1.9, "luminous": 1.8, "lush": 1.7, "luxurious": 2.1,
    "luxury": 1.9, "magical": 2.3, "majestic": 2.4, "mastery": 1.8,
    "memorable": 1.9, "mesmerize": 2.1, "mighty": 1.7, "miracle": 2.6,
    "miraculous": 2.6, "motivated": 1.7, "nifty": 1.7, "oasis": 1.7,
    "opportune": 1.5, "opportunity": 1.5, "optimism": 2.1, "overjoyed": 2.9,
    "paramount": 1.6, "pardon": 1.0, "phenomenal": 2.7, "picturesque": 2.0,
    "pinnacle": 1.9, "pleasing": 2.0, "plentiful": 1.7, "poised": 1.3,
    "polished": 1.5, "praiseworthy": 2.2, "prestige": 1.7, "prestigious": 1.9,
    "pristine": 2.0, "privileged": 1.7, "prodigy": 2.0, "proficient": 1.7,
    "prompt": 1.0, "prudent": 1.4, "punctual": 1.3, "quaint": 1.3,
    "radiance": 2.0, "rapture": 2.7, "reassure": 1.6, "refined": 1.5,
    "refreshing": 1.9, "rejoice": 2.5, "relish": 1.7, "renowned": 1.9,
    "resilient": 1.7, "resourceful": 1.8, "respectable": 1.8,
    "respectful": 1.9, "restore": 1.3, "revel": 1.8, "revere": 2.0,
    "reverence": 1.9, "revive": 1.5, "righteous": 1.8, "satisfactory": 1.4,
    "satisfying": 2.0, "savor": 1.7, "savvy": 1.6, "scenic": 1.7,
    "selfless": 2.1, "serene": 2.1, "serenity": 2.2, "skillful": 1.8,
    "soothe": 1.7, "soothing": 1.8, "sparkle": 1.9, "spectacular": 2.7,
    "spirited": 1.7, "splendor": 2.3, "spotless": 1.9, "stellar": 2.4,
    "stunning": 2.4, "stupendous": 2.6, "sturdy": 1.3, "stylish": 1.8,
    "sublime": 2.4, "sufficient": 1.0, "suitable": 1.2, "sunny": 1.8,
    "surpass": 1.6, "sweetheart": 2.5, "swift": 1.2, "tasty": 2.0,
    "tender": 1.7, "thrive": 2.0, "thriving": 2.1, "tidy": 1.4,
    "tolerant": 1.6, "tranquil": 2.0, "treat": 1.5, "trustworthy": 2.1,
    "unbeatable": 2.3, "upbeat": 2.0, "uplift": 2.0, "uplifting": 2.3,
    "valiant": 2.0, "venerable": 1.8, "versatile": 1.5, "vigorous": 1.5,
    "virtuous": 2.0, "visionary": 1.9, "vivacious": 2.1, "warmth": 1.9,
    "wellness": 1.8, "wholesome": 1.9, "willing": 1.1, "wondrous": 2.5,
    "worthwhile": 1.8, "zeal": 1.8, "zest": 1.8,
    # negative
    "abysmal": -2.5, "adverse": -1.6, "aggravate": -1.8, "agonizing": -2.7,
    "alarming": -1.9, "alienate": -1.7, "anguish": -2.6, "antagonize": -1.9,
    "appalling": -2.4, "atrocious": -2.7, "atrocity": -2.8, "bankrupt": -2.1,
    "barbaric": -2.5, "belittle": -1.8, "betrayal": -2.6, "bigot": -2.4,
    "bitterness": -1.9, "bland": -1.0, "blunder": -1.7, "bogus": -1.8,
    "bully": -2.2, "burdensome": -1.6, "calamity": -2.5, "callous": -2.0,
    "careless": -1.5, "casualty": -2.0, "chaotic": -1.8, "clumsy": -1.3,
    "coerce": -1.7, "complication": -1.3, "condemn": -1.9,
    "condescending": -1.9, "contempt": -2.1, "corruption": -2.4,
    "crappy": -2.2, "crook": -2.1, "crude": -1.5, "cumbersome": -1.3,
    "curse": -2.0, "cynical": -1.6, "damn": -1.6, "daunting": -1.5,
    "debacle": -2.1, "deceit": -2.2, "deceptive": -2.0, "defective": -1.8,
    "deficient": -1.5, "degrade": -2.0, "dejected": -2.2, "demean": -1.9,
    "demolish": -1.6, "deplorable": -2.4, "deprive": -1.8, "despise": -2.4,
    "destructive": -2.3, "deteriorate": -1.8, "detest": -2.3,
    "detrimental": -1.9, "devious": -1.9, "dire": -2.0, "disadvantage": -1.5,
    "disagree": -1.1, "disastrous": -2.6, "disbelief": -1.3,
    "discomfort": -1.5, "discourage": -1.7, "disdain": -2.0,
    "disgraceful": -2.3, "dishearten": -2.0, "dismay": -1.9, "disorder": -1.6,
    "displease": -1.8, "dispute": -1.3, "disrespect": -2.0, "disrupt": -1.5,
    "dissatisfied": -1.8, "distort": -1.5, "distraught": -2.3,
    "distrust": -1.8, "disturbing": -2.0, "downfall": -1.9, "drain": -1.2,
    "dreary": -1.7, "dysfunctional": -1.9, "eerie": -1.3, "egregious": -2.2,
    "embarrassing": -1.8, "endanger": -1.9, "erode": -1.3, "erratic": -1.4,
    "exhaust": -1.4, "exhausted": -1.6, "exploit": -1.7, "fatigue": -1.4,
    "feeble": -1.5, "fiasco": -2.0, "flaw": -1.5, "flawed": -1.6,
    "foe": -1.8, "forfeit": -1.4, "forlorn": -2.0, "frail": -1.4,
    "frown": -1.4, "fury": -2.5, "futile": -1.8, "ghastly": -2.4,
    "grieve": -2.2, "grievance": -1.6, "grudge": -1.8, "gruesome": -2.5,
    "grumble": -1.4, "grumpy": -1.6, "hamper": -1.3, "harass": -2.2,
    "hardship": -1.8, "hazard": -1.7, "hazardous": -1.9, "heartbreak": -2.5,
    "heartbreaking": -2.6, "heartless": -2.3, "hesitant": -1.1,
    "hinder": -1.4, "hoax": -1.8, "horrendous": -2.7, "humiliating": -2.3,
    "hypocrisy": -2.0, "hypocrite": -2.1, "impair": -1.5, "impatient": -1.3,
    "impede": -1.3, "imperfect": -1.2, "impolite": -1.7, "impractical": -1.2,
    "improper": -1.4, "inability": -1.3, "inaccurate": -1.3,
    "incapable": -1.5, "inconsiderate": -1.8, "inconsistent": -1.2,
    "inconvenient": -1.4, "incorrect": -1.3, "indifferent": -1.0,
    "inept": -1.8, "inexcusable": -2.2, "infect": -1.7, "infection": -1.8,
    "infuriate": -2.4, "insecure": -1.5, "insincere": -1.7,
    "insufficient": -1.3, "intimidate": -1.9, "invalid": -1.2,
    "irrational": -1.4, "irresponsible": -1.8, "irritate": -1.8,
    "irritating": -1.9, "jeopardize": -1.8, "jerk": -1.9, "junk": -1.5,
    "lament": -1.8, "lame": -1.6, "lethal": -2.2, "lousy": -2.0,
    "ludicrous": -1.6, "malice": -2.3, "malicious": -2.4, "manipulate": -1.5,
    "mediocre": -1.2, "melancholy": -1.8, "mischief": -1.2,
    "misconduct": -1.9, "misfortune": -1.9, "misguided": -1.4,
    "mishap": -1.4, "mislead": -1.8, "mistrust": -1.7, "moan": -1.3,
    "monotonous": -1.2, "monster": -1.9, "mundane": -0.9, "naive": -1.1,
    "naughty": -1.2, "nauseous": -1.8, "needy": -1.2, "nonsense": -1.5,
    "notorious": -1.6, "obnoxious": -2.1, "obscene": -2.1, "obsolete": -1.2,
    "obstruct": -1.4, "offensive": -2.0, "ominous": -1.8, "oppress": -2.1,
    "outdated": -1.1, "overbearing": -1.6, "overwhelm": -1.2,
    "paralyze": -1.8, "paranoid": -1.7, "peril": -2.0, "perilous": -2.1,
    "pessimism": -1.7, "petty": -1.4, "plague": -2.0, "pointless": -1.6,
    "powerless": -1.7, "prejudice": -1.9, "pretentious": -1.6,
    "provoke": -1.4, "questionable": -1.2, "reckless": -1.8,
    "regrettable": -1.7, "reluctant": -1.0, "remorse": -1.8,
    "repulsive": -2.4, "resentment": -1.9, "restless": -1.2,
    "retaliate": -1.7, "ruthless": -2.2, "sabotage": -2.1, "sarcastic": -1.3,
    "savage": -2.0, "scorn": -1.9, "scream": -1.6, "setback": -1.5,
    "shabby": -1.5, "shaky": -1.2, "shatter": -1.6, "shortage": -1.4,
    "shortcoming": -1.4, "sinister": -2.1, "skeptical": -1.1,
    "slander": -2.1, "sloppy": -1.5, "sluggish": -1.2, "smug": -1.4,
    "sneaky": -1.4, "somber": -1.5, "spite": -1.8, "stagnant": -1.2,
    "stale": -1.2, "startle": -1.2, "strain": -1.2, "stranded": -1.5,
    "subpar": -1.5, "substandard": -1.6, "suspicion": -1.3, "tarnish": -1.5,
    "tedious": -1.3, "tense": -1.3, "tension": -1.4, "terrify": -2.4,
    "terrifying": -2.6, "tiresome": -1.4, "torment": -2.4,
    "treacherous": -2.2, "treachery": -2.3, "turmoil": -1.9, "tyranny": -2.4,
    "unacceptable": -1.9, "unbearable": -2.2, "undermine": -1.5,
    "undesirable": -1.6, "uneasy": -1.3, "unethical": -2.0,
    "unforgivable": -2.4, "unfriendly": -1.7, "unjust": -2.0,
    "unkind": -1.8, "unlucky": -1.6, "unprofessional": -1.7,
    "unreliable": -1.6, "unrest": -1.6, "unsatisfactory": -1.7,
    "unstable": -1.4, "unsuccessful": -1.6, "untrustworthy": -1.9,
    "unwanted": -1.6, "unwelcome": -1.6, "unwilling": -1.1,
    "upheaval": -1.6, "uproar": -1.5, "vain": -1.3, "vengeance": -2.1,
    "vex": -1.6, "vicious": -2.4, "vile": -2.5, "vindictive": -2.2,
    "volatile": -1.3, "vomit": -1.9, "wail": -1.6, "warfare": -2.3,
    "wary": -1.0, "weaken": -1.2, "weary": -1.4, "whine": -1.4,
    "woe": -2.0, "woeful": -2.1, "wrath": -2.4, "wretched": -2.4,
})


# sentiment-bearing verbs that are not in the main verb list but whose
# inflected forms should carry the base valence
SENT_VERBS = """
acclaim adore amaze amuse appall astonish betray bless bore captivate
commend condemn criticize dazzle deceive degrade delight demean despise
detest devastate disappoint discourage disgust dishearten dislike dismay
displease distress disturb embarrass empower enchant endanger energize
enrage enrich exhaust exploit fascinate flatter flourish frighten frown
gratify grieve harass hinder humiliate infuriate inspire insult intimidate
irritate jeopardize lament mislead mock mourn nourish nurture oppress
overwhelm paralyze please provoke reassure rejoice relish resent sabotage
satisfy scorn shatter soothe startle stun tarnish terrify thrive torment
undermine uplift vex weaken whine
""".split()


def sentiment_forms(word, valence):
    """Morphological variants sharing the base valence."""
    out = {word: valence}
    in_verbs = word in set(VERBS.split()) or word in SENT_VERBS
    in_nouns = word in set(NOUNS.split())
    in_adjs = word in set(ADJECTIVES.split())
    if in_verbs:
        for form in (verb_3sg(word), verb_ing(word)):
            out.setdefault(form, valence)
        if word in IRREGULAR_VERBS:
            past, part = IRREGULAR_VERBS[word]
            out.setdefault(past, valence)
            out.setdefault(part, valence)
        else:
            out.setdefault(verb_past(word), valence)
    if in_nouns:
        plural = pluralize(word)
        if plural and plural != word:
            out.setdefault(plural, valence)
    if in_adjs and not in_verbs and not in_nouns:
        ly = ly_adverb(word)
        if ly:
            out.setdefault(ly, valence)
    return out


# ---------------------------------------------------------------------------
# Assembly.
# ---------------------------------------------------------------------------


def write_lines(path, header, lines):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# {header}\n")
        for line in lines:
            fh.write(line + "\n")
    print(f"wrote {path} ({len(lines)} entries)")


def main():
    os.makedirs(OUT, exist_ok=True)
    os.makedirs(FIXTURES, exist_ok=True)

    # closed class
    closed_rows = []
    for tag, block in CLOSED.items():
        for w in sorted(set(block.split())):
            closed_rows.append(f"{w}\t{tag}")
    write_lines(
        os.path.join(OUT, "closed_class.tsv"),
        "closed-class lexicon: surface<TAB>tag",
        sorted(closed_rows),
    )

    # open class + inflections fixture + exceptions
    open_class = OrderedDict()  # surface -> tag (first writer wins)
    inflections = []  # (form, pos, base)
    exceptions = {}  # (surface, pos) -> lemma

    mapping = {}  # (surface, tag) -> base; first writer wins on collisions

    def add(surface, tag, base=None):
        if surface in CLOSED_WORDS:
            return
        final = TAG_OVERRIDES.get(surface, tag)
        open_class.setdefault(surface, final)
        # the (form, base) pairing only holds for the expansion's own tag
        if base is not None and final == tag and tag in ("NOUN", "VERB"):
            if mapping.setdefault((surface, tag), base) != base:
                return  # an earlier expansion already claimed this surface
            inflections.append((surface, tag, base))
            if rules(surface, tag) != base:
                exceptions[(surface, tag)] = base

    nouns = list(OrderedDict.fromkeys(NOUNS.split()))
    verbs = list(OrderedDict.fromkeys(VERBS.split()))
    adjectives = list(OrderedDict.fromkeys(ADJECTIVES.split()))
    adverbs = list(OrderedDict.fromkeys(ADVERBS.split()))

    for n in nouns:
        add(n, "NOUN", n)
        plural = pluralize(n)
        if plural and plural != n:
            add(plural, "NOUN", n)
    for v in verbs:
        add(v, "VERB", v)
        add(verb_3sg(v), "VERB", v)
        add(verb_ing(v), "VERB", v)
        if v in IRREGULAR_VERBS:
            past, part = IRREGULAR_VERBS[v]
            add(past, "VERB", v)
            if part != past:
                add(part, "VERB", v)
        else:
            add(verb_past(v), "VERB", v)
    for a in adjectives:
        add(a, "ADJ")
        ly = ly_adverb(a)
        if ly:
            add(ly, "ADV")
    for form, _base in COMPARATIVES:
        add(form, "ADJ")
    for a in adverbs:
        add(a, "ADV")

    assert len(open_class) >= 5000, f"open class too small: {len(open_class)}"
    write_lines(
        os.path.join(OUT, "open_class.tsv"),
        "open-class lexicon: surface<TAB>most frequent tag",
        [f"{w}\t{t}" for w, t in sorted(open_class.items())],
    )

    # lemma exceptions: irregular be/have/do forms for AUX, plus every
    # generated form the mechanical rules cannot recover
    for form in ("am", "is", "are", "was", "were", "been", "being"):
        exceptions[(form, "AUX")] = "be"
        exceptions[(form, "VERB")] = "be"
    for form, base in (
        ("has", "have"), ("had", "have"), ("having", "have"),
        ("does", "do"), ("did", "do"), ("done", "do"), ("doing", "do"),
    ):
        exceptions[(form, "AUX")] = base
        exceptions[(form, "VERB")] = base
    for adj_form, base in COMPARATIVES:
        exceptions[(adj_form, "ADJ")] = base

    exception_rows = sorted(
        f"{surface}\t{lemma}\t{pos}" for (surface, pos), lemma in exceptions.items()
    )
    write_lines(
        os.path.join(OUT, "lemma_exceptions.tsv"),
        "lemmatizer exceptions: surface<TAB>lemma<TAB>tag",
        exception_rows,
    )

    # inflections fixture for the lemmatizer closure test
    write_lines(
        os.path.join(FIXTURES, "inflections.tsv"),
        "generated form<TAB>tag<TAB>expected lemma",
        sorted(f"{f}\t{t}\t{b}" for f, t, b in set(inflections)),
    )

    # stopwords: every non-numeral closed-class surface plus classic extras
    stop = set()
    for tag, block in CLOSED.items():
        if tag != "NUM":
            stop.update(block.split())
    stop |= set(EXTRA_STOPWORDS.split())
    write_lines(
        os.path.join(OUT, "stopwords.txt"),
        "stopword lemmas, one per line",
        sorted(stop),
    )

    write_lines(
        os.path.join(OUT, "gazetteer.txt"),
        "lowercased given names and places",
        sorted(set(GAZETTEER.split())),
    )

    write_lines(
        os.path.join(OUT, "abbreviations.txt"),
        "abbreviations that do not end a sentence",
        sorted(set(ABBREVIATIONS.split())),
    )

    lex = {}
    skip = set(NEGATORS) | set(BOOSTERS)
    for word, valence in SENTIMENT_BASES.items():
        assert -4.0 <= valence <= 4.0, word
        for form, v in sentiment_forms(word, valence).items():
            if form in skip:
                continue
            lex.setdefault(form, v)
    write_lines(
        os.path.join(OUT, "sentiment_lexicon.tsv"),
        "sentiment valence lexicon: token<TAB>valence in [-4, 4]",
        [f"{w}\t{v}" for w, v in sorted(lex.items())],
    )


if __name__ == "__main__":
    main()
