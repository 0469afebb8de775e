"""English to French through parse, transfer and generation.

"likes" becomes "plaît ... à" with subject and object swapped; the indices
carried over from the English parse are what put Marie first.

Run:  python demos/translate.py
"""

from sbgen import data_path, extract_bag, parse, read_bilingual, read_grammar, render_bag, transfer
from sbgen.generator import generate

english = read_grammar(data_path("english_ext.sbg"))
french = read_grammar(data_path("french_ext.sbg"))
lexicon = read_bilingual(data_path("en_fr_ext.sbx"))

for sentence in ("John loves Mary", "Mary loves John", "John likes Mary"):
    print(f"== {sentence}")
    source_bag = extract_bag(parse(sentence, english))
    print(render_bag(source_bag), end="")
    for result in transfer(source_bag, lexicon):
        print("  ->")
        print("".join("  " + line + "\n" for line in render_bag(result.bag).splitlines()), end="")
        for out in generate(result.bag, french):
            print("  =>", " ".join(out))
    print()
