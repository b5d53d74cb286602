"""Reference data: a degree-100 skew polynomial over F_256 with sigma the
squared Frobenius, its central bound, the central factorization, the induced
factorization chain, and the full splitting of the central degree-20 piece.

All strings are package polynomial literals; the symbol b denotes the
F_4 subfield generator a^85.  The data is mutually consistent (products
re-multiply exactly) and the test suite re-derives every relation.
"""

MODULUS = (1, 0, 1, 1, 1, 0, 0, 0, 1)  # x^8+x^4+x^3+x^2+1
FROBENIUS_EXP = 2

F_DEG100 = (
    'X^100+(a^7+a^6+a^4+a^2+a+1)*X^96+(a^7+a^6+a^4+a^2+a)*X^92+(a^7+a^6+a^4+a^2'
    '+a+1)*X^84+(a^7+a^6+a^4+a^2+a)*X^80+a*X^43+(a^7+a^5+a^4+a+1)*X^39+(a^7+a^5'
    '+a^4+1)*X^35+(a^7+a^5+a^4+a+1)*X^27+(a^7+a^6+a^5+a^2+a)*X^25+(a^7+a^5+a^4+'
    '1)*X^23+(a^3+a^2+a+1)*X^21+(a^5+a^4+a^3+a+1)*X^20+(a^7+a^6+a^5+a^3+1)*X^17'
    '+(a^7+a^4+a^3+a^2)*X^16+(a^7+a^5+a^2+a+1)*X^12+(a^3+a^2+a+1)*X^9+(a^7+a^6+'
    'a^5+a^3+1)*X^5+(a^7+a^4+a^3+a^2)*X^4+a^7+a^5+a^2+a+1'
)

FHAT = (
    'z^85+(b+1)*z^84+b*z^83+(b+1)*z^81+b*z^80+b*z^65+z^64+(b+1)*z^63+z^61+(b+1)'
    '*z^60+z^52+(b+1)*z^51+b*z^50+(b+1)*z^48+b*z^47+z^45+(b+1)*z^44+b*z^43+(b+1'
    ')*z^41+b*z^40+b*z^28+z^27+(b+1)*z^26+b*z^25+z^21+(b+1)*z^20+(b+1)*z^19+b*z'
    '^18+z^17+b*z^15+z^14+z^12+(b+1)*z^11+z^9+b*z^7+z^6+b*z^5+(b+1)*z^4+b*z^3+('
    'b+1)*z+b'
)

PHATS = [
    (
        'z+b'
    ),
    (
        'z^4+(b+1)*z^3+b*z^2+b*z+1'
    ),
    (
        'z^5+z^4+z^3+(b+1)*z+b+1'
    ),
    (
        'z^5+(b+1)*z^4+b*z^3+(b+1)*z+b'
    ),
    (
        'z^28+z^27+b*z^24+z^23+b*z^19+(b+1)*z^18+z^17+z^16+(b+1)*z^15+(b+1)*z^1'
        '4+b*z^12+(b+1)*z^11+(b+1)*z^9+b*z^8+b*z^5+b*z^4+z^2+b*z+b+1'
    ),
    (
        'z^42+z^41+b*z^40+z^39+b*z^38+b*z^35+(b+1)*z^34+z^32+(b+1)*z^31+z^30+z^'
        '29+(b+1)*z^28+b*z^27+z^26+(b+1)*z^25+(b+1)*z^24+z^21+b*z^20+b*z^19+b*z'
        '^18+(b+1)*z^11+z^9+z^8+(b+1)*z^7+b*z^6+z^5+z^3+(b+1)*z^2+z+b'
    ),
]

CHAIN_FACTORS = [
    (
        'X+a^7+a^5+a^3+a^2+a+1'
    ),
    (
        'X^4+(a^6+a^5+a^4)*X^3+(a^7+a^6+a^5+a^4+a^3)*X^2+(a^7+a^2)*X+a^7+a^6+a^'
        '5+a^4+a'
    ),
    (
        'X^5+(a^7+a^5+a^2+a)*X^4+(a^4+a+1)*X^3+(a^7+a^5+a^2+a+1)*X^2+(a^7+a^5+a'
        '^4+a^3+a^2+1)*X+a^7+a^6+a^3+a+1'
    ),
    (
        'X^20+(a^7+a^6+a^4+a^2+a+1)*X^16+(a^7+a^6+a^4+a^2+a)*X^12+(a^7+a^6+a^4+'
        'a^2+a+1)*X^4+a^7+a^6+a^4+a^2+a'
    ),
    (
        'X^28+(a+1)*X^27+(a^7+a^5+a^3+a^2+a+1)*X^26+(a^4+a)*X^25+a^3*X^24+(a^4+'
        'a^3+a^2+a)*X^23+(a^7+a^6+a^5+a^2+a)*X^22+(a^7+a^5+a^4+a^3+a^2+a+1)*X^2'
        '1+(a^7+a^5+a^4+a^3+1)*X^20+(a^6+1)*X^19+(a^7+a^5+a^4+a^3+a^2)*X^18+(a^'
        '5+a^4+a^3)*X^17+(a^7+a^4+a^2+a)*X^16+(a^3+a^2)*X^15+(a^7+a^6+a^5+a^4+a'
        '^2+a+1)*X^14+(a^3+1)*X^13+(a^7+a^5+a^3+a^2)*X^12+(a^5+a^4+a)*X^11+(a^6'
        '+a^5+a+1)*X^10+(a^7+a^4+a^3+a+1)*X^9+(a^6+a^5+a^4+a^2+a)*X^8+(a^5+a+1)'
        '*X^7+(a^7+a^3+a^2+a)*X^6+(a^7+a^5+a^4+a^3+a^2)*X^5+(a^7+a^5+a^4+a^2+a)'
        '*X^4+a^2*X^3+(a^7+a^6+a^5+a^4+a^3+a^2+a)*X^2+(a^6+a^5+a^2+1)*X+a^5+a^4'
        '+a'
    ),
    (
        'X^42+(a^5+a^4+a^3+a^2+a+1)*X^41+a^7*X^40+(a^7+a^2+a+1)*X^39+(a^7+a^5+a'
        '^4+a^3+a)*X^38+(a^7+a^4+a^2)*X^37+(a^7+a^3+a^2+a)*X^36+(a^6+a^5+a)*X^3'
        '5+(a^6+a^3+1)*X^34+(a^3+a^2)*X^33+(a^6+a^5+a^2+a)*X^32+(a^7+a^5+a^4+a^'
        '3+a^2+1)*X^31+(a^7+a^6+a^4+a^2+a+1)*X^30+(a^7+a^6+a^5+a^4+a^2+a)*X^29+'
        '(a^7+a^5+a^4+a^2+a+1)*X^28+(a^7+a^6+a^3+a+1)*X^27+(a^6+a^3+a^2+a)*X^26'
        '+(a^7+a^5+a^3+a^2+a+1)*X^25+(a^7+a^5+a^4+a^2+1)*X^24+(a^6+a^5+a^4+a^3+'
        'a+1)*X^23+(a^6+a^5+a^3+a+1)*X^22+(a^7+a^5+a^4+1)*X^21+(a^7+a^4+a^3+1)*'
        'X^20+(a^7+a^4)*X^19+(a^7+a^6+a^3+1)*X^18+(a^4+a^3+a^2)*X^17+(a^7+a^6+a'
        '^5+a)*X^16+(a^4+a^3+1)*X^15+(a^6+a^5+1)*X^14+(a+1)*X^13+(a^4+a^3)*X^12'
        '+(a^7+a^3+1)*X^11+(a^3+a^2+a+1)*X^10+(a^7+a^6+a^3+a^2+a+1)*X^9+(a^6+a^'
        '4+a^3+a^2+a+1)*X^8+(a^6+a^5+a^3+1)*X^7+(a^6+a^5+a^4+1)*X^6+(a^6+a^5+a^'
        '3+a)*X^5+(a^6+a^5+a^4+a)*X^4+(a^6+a^3+a^2+a)*X^3+(a^6+a^4+a^2+1)*X^2+('
        'a^7+a^6+a^5+a^2+a)*X+a^6+a^3+a^2+1'
    ),
]

F4_SPLIT = [
    (
        'X^5+(a^7+a^3+a^2+a+1)*X^4+(a^4+a^3)*X^3+(a^4+a+1)*X^2+(a^5+a^4+a^3+a^2'
        '+a)*X+a^7+a^6+a^5+a^4'
    ),
    (
        'X^5+(a^5+a^2+1)*X^4+(a^7+a^6+a^4+a^2+1)*X^3+(a^7+a^6+a^3+a^2+a)*X^2+(a'
        '^3+a^2+1)*X+a^7+a^5+a^3+a^2+a+1'
    ),
    (
        'X^5+(a^7+a^6+a^5+a^4+a^3+a^2+a+1)*X^4+(a^6+a^3+a^2+1)*X^3+(a^7+a^6+a^5'
        '+a^3+a^2+1)*X^2+(a^4+a^3+a^2+a+1)*X+a^5+a^4+a^3+a^2+a+1'
    ),
    (
        'X^5+(a^6+a^4+a+1)*X^4+(a^7+a^6+a^2+1)*X^3+(a^7+a^6+a^5+a^4+a^3+a)*X^2+'
        '(a^7+a^3)*X+a^6+a^2+a+1'
    ),
]
