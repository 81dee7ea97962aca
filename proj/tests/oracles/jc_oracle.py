"""Independent mpmath evaluation of the JC series and rates (40 digits, numerical
differentiation). Prints the reference values frozen in test_jaynes_cummings.cpp."""
import mpmath as mp
mp.mp.dps=40
def series(wB,D,g,bB,N=400):
    x=mp.mpf(wB)*bB; D=mp.mpf(D); g=mp.mpf(g)
    def W(n): return mp.sqrt(D**2+4*g*g*n)
    def A(n,t):
        w=W(n); return mp.cos(w*t/2)-1j*(D/w if w!=0 else 0)*mp.sin(w*t/2)
    def p(n): return mp.e**(-n*x)*(1-mp.e**(-x))
    al=lambda t: mp.fsum(p(n)*abs(A(n,t))**2 for n in range(N))
    be=lambda t: mp.fsum(p(n)*abs(A(n+1,t))**2 for n in range(N))
    ga=lambda t: mp.fsum(p(n)*mp.e**(-1j*mp.mpf(wB)*t)*A(n,t)*A(n+1,t) for n in range(N))
    return al,be,ga
cases=[('cold',0.6,0.4,0.3,2.0,1.7),('hot',0.6,0.4,0.03,0.3,5.3),('weak',0.6,1e-4,1e-3,0.3,250.0)]
for name,wB,D,g,bB,t in cases:
    al,be,ga=series(wB,D,g,bB)
    t=mp.mpf(t)
    a=al(t);b=be(t);G=ga(t)
    ad=mp.diff(al,t);bd=mp.diff(be,t);Gd=mp.diff(ga,t)
    S=a+b-1
    g1=(a*bd-ad*b-bd)/S; g2=(ad*b-a*bd-ad)/S
    r=Gd/G
    g3=-(g1+g2+2*r.real)/2
    gp=g1+g2; gm=g1-g2; Gam=g3+gp/2; om=-r.imag
    f=lambda v: mp.nstr(v,17)
    print(name,'t=',t)
    for k,v in [('alpha',a),('beta',b),('alpha_dot',ad),('beta_dot',bd),('gamma_re',G.real),('gamma_im',G.imag),('gamma_dot_re',Gd.real),('gamma_dot_im',Gd.imag),('gamma_plus',gp),('gamma_minus',gm),('Gamma',Gam),('omega',om)]:
        print('  ',k,f(v))
