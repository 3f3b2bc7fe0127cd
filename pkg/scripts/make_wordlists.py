#!/usr/bin/env python3
"""Regenerate the bundled word lists in src/bookcode/data/.

lemmas.txt plays the modern lemma-based reference dictionary: the author
vocabulary of the synthetic text generator plus filler lemmas for alphabet
coverage, sorted and deduplicated.  common_words.txt is a 1000-word
frequency-ranked list: a hand-ordered high-frequency head, padded with the
remaining vocabulary.
"""

from pathlib import Path

from bookcode.textgen import author_vocabulary

# Filler lemmas. These widen the reference dictionary beyond the generator's
# vocabulary so interpolated segments contain plausible near-misses, the way
# a real modern dictionary would.
FILLER = """
abandon ability abroad absence absent absolute abuse accent accept access
accident accompany accomplish accord account accuse accustom ache achieve
acid acknowledge acquaint acquire acquisition acre act action active actual
add address adequate adjust admire admit adopt advance adventure
affect affection afford afraid age agent ago agree agreement aid aim air
alarm alike alive allow ally alone aloud alter ambition amend america amuse
ancient anger angle angry animal announce annual anxiety apart apology
apparent appeal appear appearance apple apply approach approve april arch
argue argument arise arm arrange arrest arrive arrow art ash aside ask
asleep aspect assemble assert assign assume attach attache attack attain
attempt attend attention attitude attract august aunt author authority
avail avenue average awake aware away awful axe
baby back bad bag balance ball band bank bar bare bargain barrel base
basis basket bath battle bay beach beam bean beard beast beat beauty
become bed bee beg behalf behave behavior being bell belong beloved bend
beneath benefit berry beside best better bind bird birth bit bite bitter
black blade blame blank blanket bless blind block blood blow blue board
boast body boil bond bone bonnet border bosom bottle bottom bough bound
boundary bow bowl box boy brain branch brass bread breadth break breast
breath breathe breed brick bridge brief broad broken brook broom brown
brush bucket build bundle burden burn burst bury bush busy butter button
cabin cage cake calculate calm camp canal candle cap capable cape capital
card care carriage cart castle cat cattle celebrate cent center century
ceremony chain chair chalk chamber chance chapter charge charm chase cheap
check cheer cheese chest chief childhood chimney chin choice church circle
citizen civil claim class clay clean clerk clever cliff climate climb
cloak clock cloth clothe cloud club coach coal coarse coast coat coin
collar collect college color column comb combine comfort command commend
committee companion compare compel complain complete compose conceal
concern concert condemn conduct confess confess confirm conform confuse
connect conquer conscience conscious contain content contest contract
contrary contrast contrive convenience convenient convince cook cool copper
copy cord corn corner correct cottage cotton council count courage court
cousin cover cow coward crack crash cream create creature creek creep
crime critic crop cross crowd cruel crush cry cultivate cup cure curious
curl current curse curtain curve custom customer
damage damp dance dare date dawn dead deaf dear death decay deceive
december decent decide decision deck declare decrease deed deem defeat
defect delay delicate delight deliver demand deny depend depth descend
describe desert deserve design desire desk despair destroy detail
determine develop devil devote dictionary differ difference different dig
dignity dinner dip dish dismiss display dispose dispute distant distinct
distinguish distress disturb ditch divide division doctor dog dome
dominion double down dozen drag drain draw drawer dream dress drift drill
drink drop drown drum dull dust dwell
eager ear earn earnest earth ease east eastern edge edition educate
effort egg eight either elder element elevate eleven else employ empty
enclose encounter encourage enemy engage engine enter entertain entire
entrance envelope envy equal erect err errand error essence establish
evening event ever evil exact examine example exceed excellent except
excess excite excuse exercise exert exhaust exist expense experience
experiment explain explore express extend extent extreme
fabric fade faint fair faith fall fame familiar famous fancy far farm
fashion fast fasten fat fate fault feast feather feature february feeble
feed fellow fence fetch fever few fierce fifteen fifty figure fill final
fine finger finish fire firm first fish fit five fix flag flame flash
flat flavor flesh float flock flood floor flour flow flower fold folk
fond food fool foot forbid force ford foreign forest forgive form formal
former forth forty forward foundation fountain four fowl frame frank
fresh fret friday fright fruit fry fun funeral fur furnish future
gallant gallon garden gate gather gay gaze gear gentle genuine gift
girl glad glance glass glory glove goat gold golden governor grace grade
grain grand grant grass grave gray graze grease green greet grey grief
grind ground group grow growth guard guess guest guide guilt gun
habit hair hall hammer handle handsome happy harbor harm harvest haste
hat hatred haul hay heal health heap hear hearty heat heaven heavy hedge
heel height hell helm help hen herd hesitate hide hill hinder hire
history hit hole hollow holy home honest honey hood hook horn hospital
host hotel hunger hunt hurry hurt husband hut
ice idea idle ignorance ill image imagine imitate immediate immense
import impress impulse inch incident inclination incline include income
increase indebted indian indicate indulge industry infant inferior
influence injury ink inn inquire insect insist instant instead institute
instrument insult insurance intend intent introduce invent invite iron
island issue item ivory
jail january jar jaw jealous jewel job join joint joke journal joy judge
juice july jump june jury
keen kettle key kick kill kindness kiss kitchen knee kneel knife knit
knock knot
labor lace lack ladder lake lamb lame lamp language lap lash last latter
laugh laughter launch lawyer lazy lean leap learn least leather leave
lecture leg lend length lesson lest level liberty library lick lid lift
limb limit linen link lip liquid list listen literature load loan local
lock lodge lofty log lonely look loose lord lot loud lumber lump lung
machine mad madam magic mail main major manage manner manufacture map
march mark market marriage marry mass mat match material matter may
meadow meal mean meantime meanwhile medicine meek melt member memory
mend mercy mere merit merry metal method middle midnight mild mile milk
mill million mind mine mineral mingle minister minute mischief miserable
misery miss mission mistake mistress mix model moderate modest moment
monday monster mood moon moral morrow mortal motion motive mount mourn
mouse mouth move movement mud murder murmur muscle music mutual mystery
nail naked narrow nation native nay neat necessity neck need needle
neglect neighborhood neither nephew nerve nest net news nice niece
nine noble nod noise none noon north nose note notice notion november
nowhere number numerous nurse nut
oak oar oath obey object oblige obscure observe obtain occasion occupy
ocean october odd offend offense office official oil opera operate
opportunity oppose oppress order ordinary organ origin ornament otherwise
ounce outline outward oven owe own owner
pace pack package page pail pain paint pair pale pan pane paper parcel
pardon parent parish park parlor part particle pass passenger passion
past paste pasture path patience patient pause paw peace pear peculiar
pen pencil penny perceive perfect perform perfume peril period perish
permanent permit person persuade pick picture pie pig pile pin pine pink
pint pipe pit pitch pity plain plan plane plant plate play plead pleasure
plenty plow pluck plunge pocket poem poet policy polish polite political
pond pool popular porch position positive possess possible pot pound
pour poverty powder practical practice praise pray preach precious
prefer prepare presence preserve press pretend pretty prevail price
pride priest prime print prison prize probable procure produce product
profession professor profit progress prompt pronounce proof proper
property propose prospect protest proud prove provide public pull pump
punish pupil pure purple purse push
quality quantity quart quarter queen quick quiet quite
rabbit race rag rail rain raise rank rapid rare rate rattle raw ray
reach real realize reap rear rebel recall recent reckon recognize
recommend record recover red reduce refer reflect reform refresh regard
region register regret regular reign reject relate relief relieve
religion rely remain remark remedy remember remind remove renew rent
repair repeat replace reply represent reproach republic reputation
rescue resemble reserve resign resist resolve resort respect rest
restore restrain retain review reward ribbon rice rid ride ridge rifle
rim ring ripe risk rival roar roast rob rock rod roll roof root rope
rot rough round row royal rub rubber rude rug ruin rule rush rust
sabbath sack sacred sacrifice sad saddle sail saint sake salary sale
salt salute sand satisfy saturday sauce savage save saw scale scarce
scare scatter scene scent scheme scholar school science scissors scold
scorn scrape scratch scream screen screw sea seal seam search season
seat second secure seed seek seize seldom select sell senate sense
sentence september serious serve session seven several severe shade
shadow shake shall shallow shame shape share sharp shave shed sheep
sheet shelf shell shelter shepherd shield shift shine ship shirt shock
shoe shop shore short shoulder shout shower shut sick sigh sight sign
signal silence silent silk silver similar simple sin sincere sing
single sink sir sister six size sketch skill skin skirt sky slave
sleep slender slice slight slip slope slow small smart smell smile
smoke smooth snake snap snow soap sober social society soft soil
soldier solemn solid solve somebody somewhat song sore sorrow sort
soul sound soup sour south southern space spare speak special speech
speed spell spin spite splendid split spoil spoon sport spot spread
square stable staff stage stain stair stamp star stare start startle
statement steady steal steam steel steep steer stem step stern stick
stiff stir stock stocking stomach stone stoop stop store storm story
stove straight strain strange stream strength stretch strict strife
string strip stripe stroke struggle stuff stupid style succeed sudden
sugar suit sunday supper supply suppose supreme sure surface surprise
surround suspect swallow swamp swear sweat sweep sweet swell swift
swim sword
tail tailor tale talent talk tall tame tap taste tax tea teach tear
tease telegraph telephone temper temple tempt ten tend tender term
terrible territory test thank theater theory thick thief thin thirst
thirty thorn thorough thousand thread threat three throat throne
thunder thursday thus ticket tide tie tight till timber tin tip tire
title toast tobacco toe toil tomb ton tone tongue tool tooth top
torment total touch tough tour trace track trade train tramp trap
travel tray treasure treat tremble trial tribe trick trifle trip
triumph troop trot trouble trunk truth try tube tuesday tumble tune
turkey turn twelve twenty twice twist two type
ugly umbrella uncle union unit universe unless upper urge use useful
usual utter
vacation vain valley value vanish variety various vast vegetable veil
vein venture verse vessel vice view vigor village vine violence virtue
visible vision visit voice volume vote vow voyage vulgar
wage wagon waist wait walk wall wander want warm warn wash waste watch
wave wax weak wealth weapon weary weather weave wednesday weed week
weep weigh welcome west western wheat wheel whip whisper whistle white
wholly wicked wide widow width wild wine wing winter wipe wire wisdom
wise wish wit witness wonder wood wool worm worry worse worship worth
wound wrap wreck wrist wrong
yard yell yellow yesterday yield yoke yonder young youth
zeal zero zone
""".split()

# Hand-ordered high-frequency head for the common-words list.
COMMON_HEAD = """
the of and a to in is was that it he for on with as his they be at you
i have this from or had by not but what all were we when your can said
there use an each which she do how their if will up other about out
many then them these so some her would make like him into time has look
two more write go see number no way could people my than first water
been call who its now find long down day did get come made may part
over new sound take only little work know place year live me back give
most very after thing our just name good sentence man think say great
where help through much before line right too mean old any same tell
boy follow came want show also around form three small set put end
does another well large must big even such because turn here why ask
went men read need land different home us move try kind hand picture
again change off play spell air away animal house point page letter
mother answer found study still learn should world high every near add
food between own below country plant last school father keep tree never
start city earth eye light thought head under story saw left few while
along might close something seem next hard open example begin life
always those both paper together got group often run important until
children side feet car mile night walk white sea began grow took river
four carry state once book hear stop without second late miss idea
enough eat face watch far real almost let above girl mountain cut young
talk soon list song being leave family it's
""".split()


def main() -> None:
    data_dir = Path(__file__).resolve().parents[1] / "src" / "bookcode" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)

    lemmas = sorted(set(FILLER) | author_vocabulary())
    (data_dir / "lemmas.txt").write_text("\n".join(lemmas) + "\n", encoding="utf-8")

    common: list[str] = []
    seen = set()
    for w in COMMON_HEAD:
        if w not in seen:
            common.append(w)
            seen.add(w)
    for w in lemmas:  # pad to 1000 with remaining vocabulary
        if len(common) >= 1000:
            break
        if w not in seen:
            common.append(w)
            seen.add(w)
    common = common[:1000]
    (data_dir / "common_words.txt").write_text("\n".join(common) + "\n", encoding="utf-8")

    print(f"lemmas.txt: {len(lemmas)} words")
    print(f"common_words.txt: {len(common)} words")


if __name__ == "__main__":
    main()
