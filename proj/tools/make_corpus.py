#!/usr/bin/env python3
"""Regenerates the labeled caption corpora under corpus/."""
import json, os, datetime as dt, math
HERE=os.path.dirname(os.path.abspath(__file__))
ROOT=os.path.join(HERE,'..','corpus','captions')

def write(name, pts, caption, gold, spec=None):
    d=os.path.join(ROOT,name); os.makedirs(d,exist_ok=True)
    with open(os.path.join(d,'series.csv'),'w') as f:
        f.write('date,value\n')
        for t,y in pts: f.write(f'{t.isoformat()},{y:g}\n')
    if spec is None:
        lo=min(y for _,y in pts); hi=max(y for _,y in pts)
        spec={"plotWidth":640,"plotHeight":480,"xRange":[pts[0][0].isoformat(),pts[-1][0].isoformat()],
              "yRange":[math.floor(lo), math.ceil(hi)]}
    with open(os.path.join(d,'spec.json'),'w') as f: json.dump(spec,f,indent=2); f.write('\n')
    with open(os.path.join(d,'caption.txt'),'w') as f: f.write(' '.join(caption)+'\n')
    sents=[{"index":i,"references":refs} for i,refs in enumerate(gold)]
    with open(os.path.join(d,'gold.json'),'w') as f: json.dump({"sentences":sents},f,indent=2); f.write('\n')

Y=lambda y,m=1,d=1: dt.date(y,m,d)
def yearly(y0,vals): return [(Y(y0+i),v) for i,v in enumerate(vals)]
def monthly(y0,m0,vals):
    out=[]
    for i,v in enumerate(vals):
        k=(m0-1)+i; out.append((Y(y0+k//12,k%12+1),v))
    return out
def pt(kind,at): return {"kind":kind,"at":at}
def tr(kind,a,b): return {"kind":kind,"start":a,"end":b}

# Mortgage rates, yearly 1971-2020
mort=[7.5,7.4,8.0,9.2,10.4,8.9,8.6,9.6,11.2,13.7,16.6]+[round(16.6-8.1*i/6,3) for i in range(1,7)]+\
 [10.3,10.3,10.1,9.25,8.4,7.9,8.4,7.9,7.8,7.6,6.9,7.4,8.1,7.0,6.5,5.8,5.8,5.9,6.4,6.3,6.0,5.0,4.7,4.5,3.7,4.0,4.2,3.9,3.6,4.0,4.5,3.9,3.1]
write('mortgage-rates', yearly(1971,mort),
 ["The 30-year fixed mortgage rates peaked in 1981 and then declined sharply until 1987.",
  "Rates soared from 1980 to 1991.",
  "Rates soared from 1980 to 1981.",
  "The peak in 1981 is easy to spot.",
  "Since then they drifted lower, with a dip between 2008 and 2012."],
 [[pt("localMax","1981-01-01"),tr("fall","1981-01-01","1987-01-01")],
  [tr("rise","1980-01-01","1991-01-01")],
  [tr("rise","1980-01-01","1981-01-01")],
  [pt("localMax","1981-01-01")],
  [tr("fall","2008-01-01","2012-01-01")]])

# Real home price index, yearly 1890-2006
hp={}
for y in range(1890,2007):
    if y<=1894: v=100+2.5*(y-1890)
    elif y<=1921: v=110-45*(y-1894)/27
    elif y<=1950: v=65+45*(y-1921)/29
    elif y<=1970: v=110+10*(y-1950)/20
    elif y<=1984: v=120-22*(y-1970)/14
    elif y<=1989: v=98+27*(y-1984)/5
    elif y<=1997: v=125-20*(y-1989)/8
    else: v=110+90*((y-1997)/9)**1.3
    hp[y]=round(v,2)
home=yearly(1890,[hp[y] for y in range(1890,2007)])
tail=["A similar supply-side solution is what we need."]
write('home-prices', home,
 ["The chart shows the real home price index between 1890 and 2006.",
  "The housing prices have skyrocketed starting around 1997 and we need to act.",
  "Looking back, they declined since 1894 with an increased housing supply as manufactured homes became available to the public.",
  tail[0]],
 [[],[tr("rise","1997-01-01","2006-01-01")],[tr("fall","1894-01-01","1921-01-01")],[]])
write('home-prices-typo', home,
 ["Looking back, they declined since 1984 with an increased housing supply as manufactured homes became available to the public.",
  "The recent low point in 1997 came right before the boom."],
 [[tr("fall","1984-01-01","1985-01-01")],[pt("localMin","1997-01-01")]])

# North Korea GDP, yearly 1950-2000
nk=[]
for y in range(1950,2001):
    if y<=1985: v=2+10*((y-1950)/35)**1.1
    elif y<=1990: v=12+0.4*(y-1985)
    elif y<=1998: v=14-7*(y-1990)/8
    else: v=7+0.3*(y-1998)
    nk.append(round(v,3))
write('north-korea-gdp', yearly(1950,nk),
 ["From 1950, North Korea's GDP increased quite rapidly until 1985, then it fell sharply in the 1990s.",
  "GDP peaked in 1990.",
  "Output bottomed out in 1998."],
 [[tr("rise","1950-01-01","1985-01-01"),tr("fall","1990-01-01","1998-01-01")],
  [pt("localMax","1990-01-01")],
  [pt("localMin","1998-01-01")]])

# Stock index, monthly 1995-01 .. 2002-12
idx=[]
for i in range(96):
    if i<=34: v=500+100*i/34            # to 1997-11
    elif i<=62: v=600+900*((i-34)/28)**1.5
    else: v=1500-700*((i-62)/33)
    idx.append(round(v,1))
idx[34]=590.0
write('stock-index', monthly(1995,1,idx),
 ["The index soared since Nov 1997 until it peaked in March 2000.",
  "It then slid through 2002."],
 [[tr("rise","1997-11-01","2000-03-01"),pt("localMax","2000-03-01")],
  [tr("fall","2000-03-01","2002-12-01")]])

# Approval rating, monthly 2017-05 .. 2022-04
ap=[]
for i in range(60):
    k=i  # 0 is 2017-05
    if k<=19: v=62-39*k/19                       # to 2018-12 (k=19)
    elif k<=32: v=23+11*(k-19)/13                # to 2020-01 (k=32)
    elif k<=37: v=34+11*(k-32)/5                 # to 2020-06 (k=37)
    elif k<=44: v=45-7*(k-37)/7                  # to 2021-01
    else: v=38+3*math.sin((k-44)/2)
    ap.append(round(v,2))
write('approval-rating', monthly(2017,5,ap),
 ["Macron's approval rating fell sharply from May 2017 to December 2018.",
  "The rating hit a low in December 2018.",
  "During the period of Covid-19 in 2020, the rating climbed.",
  "It peaked in June 2020."],
 [[tr("fall","2017-05-01","2018-12-01")],
  [pt("localMin","2018-12-01")],
  [tr("rise","2020-01-01","2020-06-01")],
  [pt("localMax","2020-06-01")]])

# King County home prices, monthly 2000-01 .. 2015-12
kc=[]
for i in range(192):
    if i<=98: v=250+200*(i/98)**1.2            # to 2008-03 (i=98)
    elif i<=145: v=450-150*(i-98)/47           # to 2012-02 (i=145)
    else: v=300+140*(i-145)/46
    kc.append(round(v,1))
write('king-county', monthly(2000,1,kc),
 ["Home prices in King County peaked around March 2008.",
  "Prices then plunged until 2012.",
  "The 2012 trough marked the bottom of the market.",
  "After May 2012, prices rose steadily.",
  "Prices peaked in 2018."],
 [[pt("localMax","2008-03-01")],
  [tr("fall","2008-03-01","2012-02-01")],
  [pt("localMin","2012-02-01")],
  [tr("rise","2012-05-01","2015-12-01")],
  [{"kind":"localMax","outOfChart":True}]])

# Unemployment-like yearly 1980-2010 for the 1987/1997 typo
un=[]
for y in range(1980,2011):
    if y<=1992: v=9-3*(y-1980)/12
    elif y<=1997: v=6-2*(y-1992)/5
    elif y<=2007: v=4+5*(y-1997)/10
    else: v=9-0.5*(y-2007)
    un.append(round(v,3))
un[1987-1980]=7.5
write('typo-years', yearly(1980,un),
 ["Housing costs rose from 1997 to 2007.",
  "Housing costs rose from 1987 to 2007."],
 [[tr("rise","1997-01-01","2007-01-01")],[tr("rise","1987-01-01","2007-01-01")]])

# Daily 2020 index for one-endpoint phrases

cv=[]
d0=dt.date(2020,1,1)
for i in range(366):
    d=d0+dt.timedelta(days=i)
    if d<dt.date(2020,2,20): v=3300+i
    elif d<=dt.date(2020,3,23): v=3350-1150*((d-dt.date(2020,2,20)).days/32)
    else: v=2200+1550*((d-dt.date(2020,3,23)).days/283)**0.8
    cv.append((d,round(v,2)))
write('covid-index', cv,
 ["Stocks plunged in March 2020.",
  "Stocks surged after March 2020.",
  "They climbed over the last six months."],
 [[tr("fall","2020-03-01","2020-03-23")],
  [tr("rise","2020-03-23","2020-12-31")],
  [tr("rise","2020-07-01","2020-12-31")]])

# Known failure modes
ROOT=os.path.join(HERE,'..','corpus','limitations')
write('king-county-misses', monthly(2000,1,kc),
 ["Home prices bottomed out in May 2012.",
  "Then prices climbed for three straight years.",
  "Prices took off in 2013 after a drop in the number of sales in 2012."],
 [[pt("localMin","2012-02-01")],
  [tr("rise","2012-05-01","2015-12-01")],
  [tr("rise","2013-01-01","2015-12-01")]])
